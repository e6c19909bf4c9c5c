"""Generic parameters of a type-12221 Ext algebra and the case split on r4."""
from ..freealg import QQ


class GenericParams:
    """Frobenius data (diagonal Lambda) and relation coefficients.

    r3 = z1 z2^2 + v z2 z1 z2 + w z2^2 z1; the meaning of p, q, r depends on
    the case (which y-entries they fill).  c maps (p, i) to c_{pi}; extra keeps
    auxiliary values such as f and h.
    """

    FIELDS = ("g1", "g2", "t", "v", "w", "p", "q", "r")

    def __init__(self, g1, g2, t, v, w, p, q, r, case=5, c=None, field=QQ, extra=None):
        F = field
        self.field = F
        self.g1, self.g2, self.t = F(g1), F(g2), F(t)
        self.v, self.w = F(v), F(w)
        self.p, self.q, self.r = F(p), F(q), F(r)
        self.case = case
        self.c = {k: F(x) for k, x in (c or {}).items() if x}
        self.extra = dict(extra or {})
        if not (self.g1 and self.g2 and self.t):
            raise ValueError("g1, g2 and t must be nonzero")

    def g(self, i):
        return self.g1 if i == 1 else self.g2

    def replace(self, **kw):
        vals = {k: getattr(self, k) for k in self.FIELDS}
        c = dict(self.c)
        for k, x in kw.items():
            if k in vals:
                vals[k] = x
            elif k.startswith("c") and len(k) == 3:
                c[(int(k[1]), int(k[2]))] = x
            else:
                raise KeyError(k)
        return GenericParams(case=self.case, c=c, field=self.field, extra=self.extra, **vals)

    def __repr__(self):
        F = self.field
        parts = ["%s=%s" % (k, F.fmt(getattr(self, k))) for k in self.FIELDS]
        parts += ["c%d%d=%s" % (k[0], k[1], F.fmt(x)) for k, x in sorted(self.c.items())]
        return "GenericParams(case=%d, %s)" % (self.case, ", ".join(parts))


def gm_check(g1, g2, v=None, w=None):
    """GM2: (g1/g2)^i != 1 for i = 1..4.  GM3: 1 + v + w != 0 (True when v, w are not given)."""
    ratio = g1 / g2
    gm2 = all(ratio ** i != 1 for i in range(1, 5))
    gm3 = True if v is None else (1 + v + w) != 0
    return {"gm2": gm2, "gm3": gm3}


def case_factors(g1, g2, t):
    """The five factors 1 - t g1^a g2^b from SI(5c), keyed by case number."""
    return {
        1: 1 - t * g1 ** 4,
        2: 1 - t * g2 ** 4,
        3: 1 - t * g1 * g2 ** 3,
        4: 1 - t * g1 ** 2 * g2 ** 2,
        5: 1 - t * g1 ** 3 * g2,
    }


def case_dispatch(g1, g2, t):
    """Number of the vanishing factor, or None when none vanishes."""
    zero = [k for k, x in case_factors(g1, g2, t).items() if x == 0]
    if len(zero) > 1:
        raise ValueError("several factors vanish (%s); GM2 fails" % zero)
    return zero[0] if zero else None
