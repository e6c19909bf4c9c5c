"""Ext of the trivial module via the normalized bar complex.

bar_s in multidegree m has basis [a1|...|as] with standard monomials a_i of
positive degree summing to m, and

    d[a1|...|as] = sum_{i=2..s} (-1)^(i-1) [a1|...|a_(i-1) a_i|...|as].

Betti numbers b_(s,n) are the homology dimensions of this complex.
"""
import os

from .linalg import Echelon, kernel_and_image

DEFAULT_DIM_CAP = 20000


class DimensionCapExceeded(RuntimeError):
    pass


def dim_cap():
    return int(os.environ.get("NCALG_DIM_CAP", DEFAULT_DIM_CAP))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def word_multidegrees(pres, n):
    """Multidegrees of all words of first-component degree n."""
    layers = [{(0,) * len(pres.degrees[0])}]
    for d in range(1, n + 1):
        cur = set()
        for g in pres.degrees:
            if g[0] <= d:
                for m in layers[d - g[0]]:
                    cur.add(tuple(x + y for x, y in zip(m, g)))
        layers.append(cur)
    return sorted(layers[n])


class BarComplex:
    def __init__(self, sysm, cap=None):
        self.sysm = sysm
        self.cap = dim_cap() if cap is None else cap
        self._by_md = {}
        for n in range(1, sysm.bound + 1):
            for w in sysm.standard_monomials(n):
                self._by_md.setdefault(sysm.multidegree(w), []).append(w)
        self._basis = {}
        self._index = {}

    def words(self, md):
        return self._by_md.get(md, [])

    def basis(self, s, md):
        key = (s, md)
        hit = self._basis.get(key)
        if hit is not None:
            return hit
        if s == 0:
            out = [()] if all(x == 0 for x in md) else []
        elif md[0] < s:
            out = []
        else:
            out = []
            for m1, ws in self._by_md.items():
                if m1[0] > md[0] - (s - 1):
                    continue
                rest = _sub(md, m1)
                tails = self.basis(s - 1, rest)
                if not tails:
                    continue
                for w in ws:
                    for t in tails:
                        out.append((w,) + t)
            out.sort(key=lambda t: tuple(self.sysm.key(w) for w in t))
        self._basis[key] = out
        return out

    def dim(self, s, md):
        return len(self.basis(s, md))

    def index(self, s, md):
        key = (s, md)
        hit = self._index.get(key)
        if hit is None:
            hit = {t: i for i, t in enumerate(self.basis(s, md))}
            self._index[key] = hit
        return hit

    def check_cap(self, s, md):
        n = self.dim(s, md)
        if n > self.cap:
            raise DimensionCapExceeded("bar slice s=%d, degree %s has dimension %d > cap %d"
                                       % (s, md, n, self.cap))

    def differential_of(self, t, md):
        """d of one basis tuple, as a sparse vector on bar_(s-1) basis indices."""
        idx = self.index(len(t) - 1, md)
        nf = self.sysm.nf_word
        out = {}
        for i in range(1, len(t)):
            sign = -1 if i % 2 else 1   # merging positions i, i+1 (1-based) carries (-1)^i
            for w, c in nf(t[i - 1] + t[i]).items():
                key = idx[t[:i - 1] + (w,) + t[i + 1:]]
                nv = out.get(key, 0) + sign * c
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
        return out

    def differential(self, s, md):
        self.check_cap(s, md)
        if s <= 1:
            return [{} for _ in self.basis(s, md)]
        return [self.differential_of(t, md) for t in self.basis(s, md)]

    def rank(self, s, md):
        if s <= 1 or self.dim(s, md) == 0 or self.dim(s - 1, md) == 0:
            return 0
        e = Echelon()
        for v in self.differential(s, md):
            if v:
                e.add(v)
        return len(e)

    def homology_dim(self, s, md):
        return self.dim(s, md) - self.rank(s, md) - self.rank(s + 1, md)

    def check_d_squared(self, s, md):
        """True when d_(s-1) d_s vanishes on the slice."""
        if s < 3:
            return True
        first = self.differential(s, md)
        lower = self.basis(s - 1, md)
        for v in first:
            acc = {}
            for j, c in v.items():
                for k, x in self.differential_of(lower[j], md).items():
                    nv = acc.get(k, 0) + c * x
                    if nv:
                        acc[k] = nv
                    else:
                        acc.pop(k, None)
            if acc:
                return False
        return True


class BettiTable:
    """b[(s, multidegree)] with totals by first-component degree."""

    def __init__(self, entries, s_max, n_max):
        self.entries = {k: v for k, v in entries.items() if v}
        self.s_max = s_max
        self.n_max = n_max

    def get(self, s, n):
        return sum(v for (t, md), v in self.entries.items() if t == s and md[0] == n)

    def by_degree(self):
        out = {}
        for (s, md), v in self.entries.items():
            out[(s, md[0])] = out.get((s, md[0]), 0) + v
        return dict(sorted(out.items()))

    def euler_series(self):
        """Coefficients of sum_(s,n) (-1)^s b_(s,n) t^n up to n_max."""
        out = [0] * (self.n_max + 1)
        for (s, n), v in self.by_degree().items():
            if n <= self.n_max:
                out[n] += (-1) ** s * v
        return out


def betti_numbers(sysm, s_max, n_max, method="bar", cap=None):
    if n_max > sysm.bound:
        raise ValueError("n_max %d exceeds the completion bound %d" % (n_max, sysm.bound))
    if method == "resolution":
        return _betti_by_resolution(sysm, s_max, n_max)
    if method != "bar":
        raise ValueError("unknown method %r" % method)
    bar = BarComplex(sysm, cap)
    entries = {}
    if s_max >= 0:
        entries[(0, (0,) * len(sysm.pres.degrees[0]))] = 1
    for n in range(1, n_max + 1):
        for md in word_multidegrees(sysm.pres, n):
            for s in range(1, min(s_max, n) + 1):
                entries[(s, md)] = bar.homology_dim(s, md)
    return BettiTable(entries, s_max, n_max)


def _betti_by_resolution(sysm, s_max, n_max):
    """Betti numbers from a minimal free resolution of k as a right module, degree by degree."""
    k = len(sysm.pres.degrees[0])
    zero = (0,) * k
    one = sysm.field.one
    words = {}
    for n in range(0, n_max + 1):
        for w in sysm.standard_monomials(n):
            words.setdefault(sysm.multidegree(w), []).append(w)
    gens = {0: [(zero, None)]}  # s -> list of (multidegree, image in P_(s-1))
    entries = {(0, zero): 1}

    def basis(s, md):
        out = []
        for g, (gmd, _) in enumerate(gens.get(s, [])):
            for w in words.get(_sub(md, gmd), []):
                out.append((g, w))
        return out

    def image(s, g, w):
        """d(e_g * w) in P_(s-1) as {(h, u): c}."""
        out = {}
        for (h, u), c in gens[s][g][1].items():
            for v, x in sysm.nf_word(u + w).items():
                key = (h, v)
                nv = out.get(key, 0) + c * x
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
        return out

    for n in range(1, n_max + 1):
        for md in word_multidegrees(sysm.pres, n):
            for s in range(1, min(s_max, n) + 1):
                src = basis(s - 1, md)
                if s == 1:
                    kernel = [{b: one} for b in src]
                else:
                    tgt = {b: i for i, b in enumerate(basis(s - 2, md))}
                    imgs = [{tgt[key]: c for key, c in image(s - 1, g, w).items()} for g, w in src]
                    _, ker = kernel_and_image(imgs)
                    kernel = [{src[j]: c for j, c in v.items()} for _, v in ker]
                col = {b: i for i, b in enumerate(src)}
                e = Echelon()
                for g, w in basis(s, md):
                    v = {col[key]: c for key, c in image(s, g, w).items()}
                    if v:
                        e.add(v)
                new = 0
                for v in kernel:
                    vv = {col[key]: c for key, c in v.items()}
                    if e.add(vv) is not None:
                        gens.setdefault(s, []).append((md, v))
                        new += 1
                entries[(s, md)] = new
    return BettiTable(entries, s_max, n_max)


def resolution_shape(table, d):
    """Check the Gorenstein symmetry of the generator degrees through homological degree d.

    Returns (True, l) or (False, reason).
    """
    degs = {}
    for (s, n), v in table.by_degree().items():
        degs.setdefault(s, []).extend([n] * v)
    for s in degs:
        degs[s].sort()
    for s in degs:
        if s > d and degs[s]:
            return False, "nonzero Betti numbers in homological degree %d > %d" % (s, d)
    if len(degs.get(d, [])) != 1:
        return False, "homological degree %d has %d generators, expected 1" % (d, len(degs.get(d, [])))
    l = degs[d][0]
    for w in range(d + 1):
        a, b = degs.get(w, []), degs.get(d - w, [])
        if len(a) != len(b):
            return False, "n_%d = %d but n_%d = %d" % (w, len(a), d - w, len(b))
        for j in range(len(a)):
            if a[j] + b[len(a) - 1 - j] != l:
                return False, "i_(%d,%d) + i_(%d,%d) = %d != %d" % (w, j + 1, d - w, len(a) - j, a[j] + b[len(a) - 1 - j], l)
    return True, l
