"""Exact coefficient fields: Q and Q[u]/(f) for a monic irreducible f of degree <= 2."""
from gmpy2 import mpq


class FieldError(ValueError):
    pass


def rational(x, den=1):
    if isinstance(x, str):
        if "/" in x:
            a, b = x.split("/")
            return mpq(int(a), int(b))
        return mpq(int(x))
    return mpq(x, den) if den != 1 else mpq(x)


def _rational_sqrt(q):
    """Square root of a nonnegative rational if it is a square, else None."""
    from gmpy2 import is_square, isqrt
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    if is_square(n) and is_square(d):
        return mpq(isqrt(n), isqrt(d))
    return None


class QuadElem:
    """a + b*u with u^2 = -c1*u - c0."""
    __slots__ = ("a", "b", "F")

    def __init__(self, a, b, F):
        self.a = a
        self.b = b
        self.F = F

    def _lift(self, o):
        if isinstance(o, QuadElem):
            return o
        return QuadElem(mpq(o), mpq(0), self.F)

    def __add__(self, o):
        if isinstance(o, QuadElem):
            return QuadElem(self.a + o.a, self.b + o.b, self.F)
        return QuadElem(self.a + o, self.b, self.F)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.F)

    def __sub__(self, o):
        if isinstance(o, QuadElem):
            return QuadElem(self.a - o.a, self.b - o.b, self.F)
        return QuadElem(self.a - o, self.b, self.F)

    def __rsub__(self, o):
        return QuadElem(o - self.a, -self.b, self.F)

    def __mul__(self, o):
        if isinstance(o, QuadElem):
            a, b, c, d = self.a, self.b, o.a, o.b
            bd = b * d
            return QuadElem(a * c - bd * self.F.c0, a * d + b * c - bd * self.F.c1, self.F)
        return QuadElem(self.a * o, self.b * o, self.F)

    __rmul__ = __mul__

    def norm(self):
        a, b = self.a, self.b
        return a * a - a * b * self.F.c1 + b * b * self.F.c0

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in field")
        return QuadElem((self.a - self.b * self.F.c1) / n, -self.b / n, self.F)

    def __truediv__(self, o):
        if isinstance(o, QuadElem):
            return self * o.inverse()
        if o == 0:
            raise ZeroDivisionError("division by zero in field")
        return QuadElem(self.a / o, self.b / o, self.F)

    def __rtruediv__(self, o):
        return self.inverse() * o

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r = self.F.one
        x = self
        while n:
            if n & 1:
                r = r * x
            x = x * x
            n >>= 1
        return r

    def __eq__(self, o):
        if isinstance(o, QuadElem):
            return self.a == o.a and self.b == o.b
        return self.b == 0 and self.a == o

    def __ne__(self, o):
        return not self == o

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __repr__(self):
        return self.F.fmt(self)


class Field:
    """Q (c0 is None) or Q[u]/(u^2 + c1*u + c0); degree-1 moduli bind the symbol to a rational."""

    def __init__(self, symbol=None, c0=None, c1=None, root=None):
        self.symbol = symbol
        self.c0 = None if c0 is None else mpq(c0)
        self.c1 = None if c1 is None else mpq(c1)
        self.root = root  # value of the symbol when the modulus is linear
        if self.c0 is not None:
            self.zero = QuadElem(mpq(0), mpq(0), self)
            self.one = QuadElem(mpq(1), mpq(0), self)
            self.gen = QuadElem(mpq(0), mpq(1), self)
        else:
            self.zero = mpq(0)
            self.one = mpq(1)
            self.gen = root

    @property
    def is_rational(self):
        return self.c0 is None

    def __call__(self, x):
        if self.c0 is None:
            if isinstance(x, QuadElem):
                if x.b != 0:
                    raise FieldError("element %r is not rational" % (x,))
                return x.a
            return mpq(x)
        if isinstance(x, QuadElem):
            if x.F is not self:
                if x.F != self:
                    raise FieldError("mixed fields")
                return QuadElem(x.a, x.b, self)
            return x
        return QuadElem(mpq(x), mpq(0), self)

    def key(self):
        if self.c0 is None:
            return ("Q", self.symbol, None if self.root is None else str(self.root))
        return ("Q[]", self.symbol, str(self.c0), str(self.c1))

    def __eq__(self, o):
        return isinstance(o, Field) and self.key() == o.key()

    def __hash__(self):
        return hash(self.key())

    def modulus_text(self):
        if self.symbol is None:
            return "Q"
        u = self.symbol
        if self.c0 is None:
            return "Q[%s]/(%s)" % (u, _lin_text(u, -self.root))
        return "Q[%s]/(%s)" % (u, _quad_text(u, self.c1, self.c0))

    def fmt(self, x):
        if self.c0 is None:
            return _qstr(mpq(x))
        x = self(x)
        a, b = x.a, x.b
        u = self.symbol
        if b == 0:
            return _qstr(a)
        if b == 1:
            ub = u
        elif b == -1:
            ub = "-" + u
        else:
            ub = "%s*%s" % (_qstr(b), u)
        if a == 0:
            return ub
        return _qstr(a) + (ub if ub.startswith("-") else "+" + ub)

    def conj(self, x):
        if self.c0 is None:
            return x
        return QuadElem(x.a - x.b * self.c1, -x.b, self)

    def __repr__(self):
        return "Field(%s)" % self.modulus_text()


def _qstr(q):
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def _lin_text(u, c0):
    if c0 == 0:
        return u
    return "%s%s%s" % (u, "+" if c0 > 0 else "-", _qstr(abs(c0)))


def _quad_text(u, c1, c0):
    s = u + "^2"
    if c1:
        s += ("+" if c1 > 0 else "-") + ("" if abs(c1) == 1 else _qstr(abs(c1)) + "*") + u
    if c0:
        s += ("+" if c0 > 0 else "-") + _qstr(abs(c0))
    return s


QQ = Field()


def make_field(symbol=None, coeffs=None):
    """Build a field from a monic modulus given as [c0, c1, 1] (or [c0, 1]).

    A reducible quadratic raises FieldError naming a rational root.
    """
    if symbol is None or coeffs is None:
        return QQ
    coeffs = [mpq(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg < 1 or deg > 2:
        raise FieldError("modulus must have degree 1 or 2, got degree %d" % deg)
    if coeffs[-1] != 1:
        raise FieldError("modulus must be monic")
    if deg == 1:
        return Field(symbol, root=-coeffs[0])
    c0, c1 = coeffs[0], coeffs[1]
    disc = c1 * c1 - 4 * c0
    s = _rational_sqrt(disc)
    if s is not None:
        root = (-c1 + s) / 2
        raise FieldError("modulus %s is reducible: %s = %s is a root"
                         % (_quad_text(symbol, c1, c0), symbol, _qstr(root)))
    return Field(symbol, c0=c0, c1=c1)


def _rational_factors(coeffs):
    """Irreducible factors over Q (as monic coefficient lists, low degree first)."""
    import sympy
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * x ** k
               for k, c in enumerate(coeffs))
    out = []
    for fac, _ in sympy.Poly(expr, x, domain="QQ").factor_list()[1]:
        cs = [mpq(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        out.append([c / cs[-1] for c in cs])
    return out


def _evaluate(coeffs, r):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * r + c
    return acc


def roots_in_field(coeffs, F):
    """Roots in F of the polynomial sum coeffs[k] * x^k with coefficients in F."""
    coeffs = [F(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    if len(coeffs) == 2:
        return [-coeffs[0] / coeffs[1]]
    if F.is_rational:
        norm = coeffs
    else:
        # g * conj(g) has rational coefficients and every root of g among its roots
        conj = [F.conj(c) for c in coeffs]
        norm = [F.zero] * (2 * len(coeffs) - 1)
        for i, a in enumerate(coeffs):
            for j, b in enumerate(conj):
                norm[i + j] = norm[i + j] + a * b
        norm = [F(c).a for c in norm]
    cands = []
    for fac in _rational_factors(norm):
        if len(fac) == 2:
            cands.append(F(-fac[0]))
        elif len(fac) == 3 and not F.is_rational:
            b, a = fac[0], fac[1]
            disc = a * a - 4 * b
            fdisc = F.c1 * F.c1 - 4 * F.c0
            e = _rational_sqrt(disc / fdisc)
            if e is not None:
                sq = F.gen * 2 + F.c1  # square root of the field discriminant
                cands.append((sq * e - a) / 2)
                cands.append((-sq * e - a) / 2)
    out = []
    for r in cands:
        if not _evaluate(coeffs, r) and r not in out:
            out.append(r)
    return out
