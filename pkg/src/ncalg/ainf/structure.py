"""Finite A-infinity structures given by tables of higher products.

Basis elements carry a homological degree s and an Adams multidegree; the
multidegree is stored as positive weights (the Ext convention negates it).
m_n has bidegree (2 - n, 0) and m_1 = 0.  A unit, when present, is strict:
m_2(1, x) = m_2(x, 1) = x and m_n vanishes on inputs containing 1 for n != 2.
"""
from itertools import product

from ..freealg import QQ, Field, make_field
from ..freealg.presentation import _Expr, tokenize
from ..linalg import inverse_dense


class MissingEntry(LookupError):
    pass


class BasisElement:
    __slots__ = ("name", "s", "md")

    def __init__(self, name, s, md):
        self.name = name
        self.s = s
        self.md = tuple(md)

    def __repr__(self):
        return "%s[%d,%s]" % (self.name, self.s, self.md)


def _add(acc, vec, c):
    for k, x in vec.items():
        nv = acc.get(k, 0) + c * x
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class AInfStructure:
    def __init__(self, field, basis, tables, unit=None, arity_bound=None, adams_bound=None):
        self.field = field
        self.basis = list(basis)
        self.tables = {n: dict(t) for n, t in tables.items()}
        self.unit = unit
        self.arity_bound = arity_bound if arity_bound is not None else max(self.tables, default=2)
        self.adams_bound = adams_bound
        self._slices = {}
        for i, b in enumerate(self.basis):
            self._slices.setdefault((b.s, b.md), []).append(i)
        for n, t in self.tables.items():
            for inp, out in t.items():
                want = self.output_bidegree(inp)
                for j in out:
                    b = self.basis[j]
                    if (b.s, b.md) != want:
                        raise ValueError("m%d%s lands in the wrong bidegree" % (n, self.names(inp)))

    def names(self, tup):
        return tuple(self.basis[i].name for i in tup)

    def index(self, name):
        for i, b in enumerate(self.basis):
            if b.name == name:
                return i
        raise KeyError(name)

    def slice(self, s, md):
        return self._slices.get((s, tuple(md)), [])

    def output_bidegree(self, tup):
        s = sum(self.basis[i].s for i in tup) + 2 - len(tup)
        k = len(self.basis[0].md)
        md = tuple(sum(self.basis[i].md[t] for i in tup) for t in range(k))
        return s, md

    def adams(self, tup):
        return sum(self.basis[i].md[0] for i in tup)

    def m(self, tup):
        """m_n on basis elements, as {basis index: coeff}."""
        tup = tuple(tup)
        n = len(tup)
        if n < 2:
            return {}
        if self.unit is not None and self.unit in tup:
            if n != 2:
                return {}
            other = tup[1] if tup[0] == self.unit else tup[0]
            return {other: self.field.one}
        out = self.output_bidegree(tup)
        if not self.slice(*out):
            return {}
        if n > self.arity_bound or (self.adams_bound is not None and self.adams(tup) > self.adams_bound):
            raise MissingEntry("m%d%s is outside the computed range" % (n, self.names(tup)))
        return self.tables.get(n, {}).get(tup, {})

    def m_vec(self, vecs):
        """Multilinear extension of m to vectors {index: coeff}."""
        out = {}
        for combo in product(*[list(v.items()) for v in vecs]):
            c = self.field.one
            for _, x in combo:
                c = c * x
            _add(out, self.m(tuple(i for i, _ in combo)), c)
        return out

    def change_basis(self, vectors, names):
        """New structure on the basis given by vectors (old coordinates) within each slice."""
        F = self.field
        new_basis = []
        for v, name in zip(vectors, names):
            bis = {(self.basis[i].s, self.basis[i].md) for i in v}
            if len(bis) != 1:
                raise ValueError("basis vector %s is not homogeneous" % name)
            s, md = bis.pop()
            new_basis.append(BasisElement(name, s, md))
        # inverse per slice
        inv = {}
        for key, olds in self._slices.items():
            news = [j for j, b in enumerate(new_basis) if (b.s, b.md) == key]
            if len(news) != len(olds):
                raise ValueError("new basis does not span slice %s" % (key,))
            M = [[vectors[j].get(i, 0) for i in olds] for j in news]
            Minv = inverse_dense(M, F)
            for a, i in enumerate(olds):
                inv[i] = {news[b]: Minv[a][b] for b in range(len(news)) if Minv[a][b]}
        unit = None
        if self.unit is not None:
            for j, v in enumerate(vectors):
                if v == {self.unit: F.one} or v == {self.unit: 1}:
                    unit = j
        tables = {}
        for n, t in self.tables.items():
            nt = {}
            for tup in _tuples_for(new_basis, n, self.adams_bound, unit):
                s, md = _outdeg(new_basis, tup)
                if not self.slice(s, md):
                    continue
                val = self.m_vec([vectors[j] for j in tup])
                res = {}
                for i, c in val.items():
                    _add(res, inv[i], c)
                if res:
                    nt[tup] = res
            tables[n] = nt
        return AInfStructure(F, new_basis, tables, unit, self.arity_bound, self.adams_bound)


def _outdeg(basis, tup):
    s = sum(basis[i].s for i in tup) + 2 - len(tup)
    k = len(basis[0].md)
    return s, tuple(sum(basis[i].md[t] for i in tup) for t in range(k))


def _tuples_for(basis, n, adams_bound, unit):
    """All n-tuples of non-unit basis indices with total Adams degree within the bound."""
    idx = [i for i in range(len(basis)) if i != unit]
    bound = adams_bound if adams_bound is not None else float("inf")

    def rec(prefix, total):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for i in idx:
            t = total + basis[i].md[0]
            if t <= bound:
                prefix.append(i)
                yield from rec(prefix, t)
                prefix.pop()
    yield from rec([], 0)


def stasheff_terms(E, tup):
    """Residual of the Stasheff identity SI(n) on one input tuple.

    sum over r+s+t = n of (-1)^(r+st) m_(r+1+t)(1^r (x) m_s (x) 1^t), applied
    with the Koszul sign (-1)^(s * (|x_1|+...+|x_r|)).
    """
    n = len(tup)
    out = {}
    degs = [E.basis[i].s for i in tup]
    for s in range(2, n):
        for r in range(0, n - s + 1):
            t = n - r - s
            inner = E.m(tup[r:r + s])
            if not inner:
                continue
            sign = (-1) ** (r + s * t + s * sum(degs[:r]))
            for j, c in inner.items():
                _add(out, E.m(tup[:r] + (j,) + tup[r + s:]), sign * c)
    return out


def check_stasheff(E, n_max, include_unit=True):
    """Evaluate SI(n) for 3 <= n <= n_max on every basis tuple in range.

    Returns (number of tuples checked, list of (tuple names, residual)).
    """
    checked = 0
    failures = []
    for n in range(3, n_max + 1):
        for tup in _tuples_for(E.basis, n, E.adams_bound, E.unit):
            s, md = E.output_bidegree(tup)
            s += 1
            if not E.slice(s, md):
                continue
            checked += 1
            res = stasheff_terms(E, tup)
            if res:
                failures.append((E.names(tup), res))
        if include_unit and E.unit is not None and n <= 4:
            for tup in _tuples_for(E.basis, n - 1, E.adams_bound, E.unit):
                for pos in range(n):
                    full = tup[:pos] + (E.unit,) + tup[pos:]
                    checked += 1
                    res = stasheff_terms(E, full)
                    if res:
                        failures.append((E.names(full), res))
    return checked, failures


def forced_vanishing(dims, n):
    """True when every n-tuple of nonzero non-unit bidegrees maps to an empty bidegree.

    dims maps (s, adams) to dimensions, with adams the positive weight.
    """
    keys = [k for k, v in dims.items() if v and k[0] > 0]
    for combo in product(keys, repeat=n):
        s = sum(k[0] for k in combo) + 2 - n
        a = sum(k[1] for k in combo)
        if dims.get((s, a), 0):
            return False
    return True


# --- text format ------------------------------------------------------------

def _coef_text(c, F):
    if F.is_rational:
        return F.fmt(c)
    c = F(c)
    if c.b == 0:
        return F.fmt(c.a)
    return "(%s)" % F.fmt(c)


def write_tables(E):
    F = E.field
    lines = ["field " + F.modulus_text()]
    if E.adams_bound is not None:
        lines.append("range arity=%d adams=%d" % (E.arity_bound, E.adams_bound))
    else:
        lines.append("range arity=%d" % E.arity_bound)
    for i, b in enumerate(E.basis):
        md = ",".join(str(-x) for x in b.md)
        lines.append("%s %s %d (%s)" % ("unit" if i == E.unit else "basis", b.name, b.s, md))
    for n in sorted(E.tables):
        for tup in sorted(E.tables[n], key=lambda t: (E.names(t))):
            out = E.tables[n][tup]
            rhs = " + ".join("%s*%s" % (_coef_text(c, F), E.basis[j].name) for j, c in sorted(out.items()))
            lines.append("m%d %s -> %s" % (n, " ".join(E.names(tup)), rhs))
    return "\n".join(lines) + "\n"


def read_tables(text):
    F = QQ
    basis = []
    unit = None
    tables = {}
    arity, adams = None, None
    names = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        kw, _, rest = body.partition(" ")
        if kw == "field":
            from ..freealg.presentation import _parse_field
            F = _parse_field(tokenize(rest, ln), ln)
        elif kw == "range":
            for part in rest.split():
                k, _, v = part.partition("=")
                if k == "arity":
                    arity = int(v)
                elif k == "adams":
                    adams = int(v)
        elif kw in ("basis", "unit"):
            parts = rest.split(None, 2)
            if len(parts) != 3:
                raise ValueError("line %d: expected 'basis NAME S (a1,...)'" % ln)
            name, s, md = parts
            md = tuple(-int(x) for x in md.strip("() ").split(","))
            names[name] = len(basis)
            if kw == "unit":
                unit = len(basis)
            basis.append(BasisElement(name, int(s), md))
        elif kw.startswith("m") and kw[1:].isdigit():
            n = int(kw[1:])
            lhs, _, rhs = rest.partition("->")
            try:
                tup = tuple(names[x] for x in lhs.split())
            except KeyError as e:
                raise ValueError("line %d: unknown basis element %s" % (ln, e))
            if len(tup) != n:
                raise ValueError("line %d: m%d needs %d inputs" % (ln, n, n))
            out = {}
            for term in _split_terms(rhs):
                coef, _, name = term.rpartition("*")
                if name not in names:
                    raise ValueError("line %d: unknown basis element %r" % (ln, name))
                ex = _Expr(tokenize(coef, ln), F, {}, {})
                c = ex.parse().scalar_value()
                _add(out, {names[name]: c}, 1)
            tables.setdefault(n, {})[tup] = out
        else:
            raise ValueError("line %d: unknown directive %r" % (ln, kw))
    if arity is None:
        arity = max(tables, default=2)
    return AInfStructure(F, basis, tables, unit, arity, adams)


def _split_terms(s):
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out
