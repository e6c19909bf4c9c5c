"""Words and noncommutative polynomials over an exact field.

A word is a tuple of generator indices; the empty tuple is the unit.
"""
from .field import FieldError


def word_degree(w, degrees):
    """Multidegree of a word given per-generator degree tuples."""
    k = len(degrees[0]) if degrees else 1
    acc = [0] * k
    for g in w:
        for t, d in enumerate(degrees[g]):
            acc[t] += d
    return tuple(acc)


def format_word(w, names):
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        n = j - i
        parts.append(names[w[i]] if n == 1 else "%s^%d" % (names[w[i]], n))
        i = j
    return "*".join(parts)


class NCPoly:
    __slots__ = ("terms", "field")

    def __init__(self, terms, field):
        self.terms = {w: c for w, c in terms.items() if c}
        self.field = field

    @classmethod
    def scalar(cls, c, field):
        return cls({(): field(c)}, field)

    @classmethod
    def word(cls, w, field, c=None):
        return cls({tuple(w): field.one if c is None else field(c)}, field)

    def _check(self, o):
        if self.field != o.field:
            raise FieldError("mixed fields: %r and %r" % (self.field, o.field))

    def _coerce(self, o):
        if isinstance(o, NCPoly):
            self._check(o)
            return o
        return NCPoly.scalar(o, self.field)

    def __add__(self, o):
        o = self._coerce(o)
        t = dict(self.terms)
        for w, c in o.terms.items():
            t[w] = t.get(w, self.field.zero) + c
        return NCPoly(t, self.field)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()}, self.field)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        if not isinstance(o, NCPoly):
            c = self.field(o)
            return NCPoly({w: a * c for w, a in self.terms.items()}, self.field)
        self._check(o)
        t = {}
        zero = self.field.zero
        for u, a in self.terms.items():
            for v, b in o.terms.items():
                w = u + v
                t[w] = t.get(w, zero) + a * b
        return NCPoly(t, self.field)

    def __rmul__(self, o):
        c = self.field(o)
        return NCPoly({w: c * a for w, a in self.terms.items()}, self.field)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        r = NCPoly.scalar(1, self.field)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, o):
        if not isinstance(o, NCPoly):
            if not self.terms:
                return o == 0
            return self.is_scalar() and self.terms.get((), 0) == o
        return self.field == o.field and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __bool__(self):
        return bool(self.terms)

    def is_scalar(self):
        return all(w == () for w in self.terms)

    def scalar_value(self):
        return self.terms.get((), self.field.zero)

    def multidegrees(self, degrees):
        return {word_degree(w, degrees) for w in self.terms}

    def multidegree(self, degrees):
        """The common multidegree, or None when not homogeneous (or zero)."""
        ds = self.multidegrees(degrees)
        return ds.pop() if len(ds) == 1 else None

    def format(self, names, key=None):
        if not self.terms:
            return "0"
        words = sorted(self.terms, key=key or (lambda w: (len(w), w)), reverse=True)
        out = []
        for w in words:
            c = self.terms[w]
            neg, body = coeff_text(c, self.field)
            if not w:
                term = body or "1"
            elif body:
                term = body + "*" + format_word(w, names)
            else:
                term = format_word(w, names)
            if not out:
                out.append(("-" if neg else "") + term)
            else:
                out.append((" - " if neg else " + ") + term)
        return "".join(out)

    def __repr__(self):
        return "NCPoly(%s)" % self.format(["z%d" % (i + 1) for i in range(64)])


def coeff_text(c, field):
    """(negative?, text) for a coefficient; text is '' for 1."""
    if field.is_rational:
        neg = c < 0
        a = -c if neg else c
        return neg, "" if a == 1 else field.fmt(a)
    c = field(c)
    if c.b == 0:
        neg = c.a < 0
        a = -c.a if neg else c.a
        return neg, "" if a == 1 else field.fmt(a)
    if c.a == 0:
        neg = c.b < 0
        b = -c.b if neg else c.b
        return neg, field.fmt(field.gen * b)
    return False, "(%s)" % field.fmt(c)
