"""Minimal A-infinity model on Ext by homotopy transfer from the cobar DGA.

With Q the splitting homotopy, lambda_2 the concatenation product and
Q lambda_1 = -id,

    lambda_n = sum_{s+t=n} (-1)^(s+1) lambda_2 (Q lambda_s (x) Q lambda_t),
    m_n = p lambda_n,

where evaluating the tensor product of maps on elements carries the Koszul
sign (-1)^(|Q lambda_t| (|x_1| + ... + |x_s|)) and |Q lambda_t| = 1 - t.
"""
from ..barext import betti_numbers
from .cobar import Cobar
from .structure import AInfStructure, BasisElement, _tuples_for


class TVec:
    """Homogeneous element of the cobar DGA: tensor degree s, multidegree md, {tuple: coeff}."""
    __slots__ = ("s", "md", "terms")

    def __init__(self, s, md, terms):
        self.s = s
        self.md = md
        self.terms = terms


def _concat(a, b, sign):
    md = tuple(x + y for x, y in zip(a.md, b.md))
    out = {}
    for u, x in a.terms.items():
        for v, y in b.terms.items():
            w = u + v
            nv = out.get(w, 0) + sign * x * y
            if nv:
                out[w] = nv
            else:
                out.pop(w, None)
    return TVec(a.s + b.s, md, out)


class MerkulovModel:
    def __init__(self, sysm, s_max, n_max, policy="echelon", cap=None):
        if n_max > sysm.bound:
            raise ValueError("n_max %d exceeds the completion bound %d" % (n_max, sysm.bound))
        self.sysm = sysm
        self.F = sysm.field
        self.s_max = s_max
        self.n_max = n_max
        self.cobar = Cobar(sysm, policy, cap)
        self.betti = betti_numbers(sysm, n_max, n_max, method="resolution")
        self.basis = []
        self.vectors = []
        k = len(sysm.pres.degrees[0])
        zero = (0,) * k
        self.unit = 0
        self.basis.append(BasisElement("1", 0, zero))
        self.vectors.append(TVec(0, zero, {(): self.F.one}))
        slices = sorted(((s, md) for (s, md), v in self.betti.entries.items() if v and 0 < s <= s_max),
                        key=lambda t: (t[0], t[1][0], tuple(-x for x in t[1])))
        for s, md in slices:
            sl = self.cobar.slice(s, md)
            want = self.betti.entries[(s, md)]
            if len(sl.H) != want:
                raise ArithmeticError("cohomology of slice %s has dimension %d, expected %d"
                                      % ((s, md), len(sl.H), want))
            basis = self.cobar.basis(s, md)
            hs = list(sl.H)
            if s == 1:
                hs.sort(key=lambda h: min(basis[i] for i in h))
            for j, h in enumerate(hs):
                self.basis.append(BasisElement("e%d_%d_%d" % (s, md[0], len(self.basis)), s, md))
                self.vectors.append(TVec(s, md, {basis[i]: c for i, c in h.items()}))
        self._slice_of = {}
        for i, b in enumerate(self.basis):
            self._slice_of.setdefault((b.s, b.md), []).append(i)
        self._qlam = {}

    def edim(self, s, md):
        if s == 0:
            return 1 if all(x == 0 for x in md) else 0
        return self.betti.entries.get((s, md), 0)

    def _to_index(self, v):
        idx = self.cobar.index(v.s, v.md)
        return {idx[t]: c for t, c in v.terms.items()}

    def _from_index(self, s, md, x):
        basis = self.cobar.basis(s, md)
        return TVec(s, md, {basis[i]: c for i, c in x.items()})

    def project(self, v):
        """Coordinates of p(v) on the chosen basis of Ext."""
        if not v.terms or not self.edim(v.s, v.md):
            return {}
        if v.s > self.s_max:
            raise ValueError("output in homological degree %d beyond s_max" % v.s)
        sl = self.cobar.slice(v.s, v.md)
        coords = sl.project(self._to_index(v))
        ids = self._slice_of[(v.s, v.md)]
        if v.s == 1:
            # basis order was sorted; map by vector identity
            return self._coords_by_vectors(v, ids)
        return {ids[j]: c for j, c in enumerate(coords) if c}

    def _coords_by_vectors(self, v, ids):
        out = {}
        for i in ids:
            (t, c), = self.vectors[i].terms.items()
            x = v.terms.get(t)
            if x:
                out[i] = x / c
        return out

    def homotopy(self, v):
        if not v.terms or v.s == 0:
            return TVec(v.s - 1, v.md, {})
        sl = self.cobar.slice(v.s, v.md)
        q = sl.homotopy(self._to_index(v))
        return self._from_index(v.s - 1, v.md, q)

    def lam(self, tup):
        n = len(tup)
        out = None
        degs = [self.basis[i].s for i in tup]
        for a in range(1, n):
            b = n - a
            left = self.qlam(tup[:a])
            if not left.terms:
                continue
            right = self.qlam(tup[a:])
            if not right.terms:
                continue
            sign = -1 if (a + 1 + (1 - b) * sum(degs[:a])) % 2 else 1
            term = _concat(left, right, sign)
            if out is None:
                out = term
            else:
                for w, c in term.terms.items():
                    nv = out.terms.get(w, 0) + c
                    if nv:
                        out.terms[w] = nv
                    else:
                        out.terms.pop(w, None)
        if out is None:
            s = sum(degs) + 2 - n
            md = tuple(sum(self.basis[i].md[k] for i in tup) for k in range(len(self.basis[0].md)))
            out = TVec(s, md, {})
        return out

    def qlam(self, tup):
        hit = self._qlam.get(tup)
        if hit is None:
            if len(tup) == 1:
                v = self.vectors[tup[0]]
                hit = TVec(v.s, v.md, {t: -c for t, c in v.terms.items()})
            else:
                hit = self.homotopy(self.lam(tup))
            self._qlam[tup] = hit
        return hit

    def m(self, tup):
        return self.project(self.lam(tuple(tup)))

    def structure(self, k_max=None):
        k_max = self.n_max if k_max is None else k_max
        tables = {}
        for n in range(2, k_max + 1):
            t = {}
            for tup in _tuples_for(self.basis, n, self.n_max, self.unit):
                s, md = _out(self.basis, tup)
                if s > self.s_max:
                    if self.edim(s, md):
                        raise ValueError("m%d lands in homological degree %d beyond s_max" % (n, s))
                    continue
                if not self.edim(s, md):
                    continue
                val = self.m(tup)
                if val:
                    t[tup] = val
            tables[n] = t
        return AInfStructure(self.F, self.basis, tables, self.unit, k_max, self.n_max)


def _out(basis, tup):
    s = sum(basis[i].s for i in tup) + 2 - len(tup)
    return s, tuple(sum(basis[i].md[k] for i in tup) for k in range(len(basis[0].md)))


def merkulov_model(sysm, s_max, n_max, policy="echelon", cap=None, k_max=None):
    model = MerkulovModel(sysm, s_max, n_max, policy, cap)
    return model.structure(k_max), model
