"""The seven solution families for (g1, g2, v, w, p, q, r) and their residual checks."""
from ..freealg import QQ, make_field, rational
from .params import GenericParams
from .residuals import nonzero, si_residuals
from .tables import coeff_tables

FIELD_I = make_field("i", [1, 0, 1])
FIELD_J = make_field("j", [1, -1, 1])


def _t(g1, g2):
    return -g1 * g2 ** 2


def _s11(F, f, v):
    g1, g2 = -f ** 3, -f ** -4
    return GenericParams(g1, g2, _t(g1, g2), v, f ** 2, v - f, -(v - f) * f, -f ** 3, field=F)


def _s12(F, p, unit):
    g1, g2 = unit * p ** 3, -p ** -4
    return GenericParams(g1, g2, _t(g1, g2), 0, unit * p ** 2, p, p ** 2, p ** 3, field=F)


def _s13a(F, v):
    j = F.gen
    g1, g2 = -v ** 3, j * v ** -4
    return GenericParams(g1, g2, _t(g1, g2), v, v ** 2, 0, 0, j ** -1 * v ** 3, field=F)


def _case4(F, h, f, v, w, p, q, r, c11=0):
    # Case 4 forces g1 g2 = h, t = h^-2 and t = -g1 g2^2, hence:
    g1, g2 = -h ** 4, -h ** -3
    c = {(1, 1): c11, (2, 1): f, (3, 1): g1 * c11 - h ** 2 * f}
    return GenericParams(g1, g2, h ** -2, v, w, p, q, r, case=4, c=c, field=F,
                         extra={"h": h, "f": f})


def _s21(F, h, f, c11=0):
    return _case4(F, h, f, h ** 2 * f - h, -h ** 3 * f, h ** 2 * f, h ** 3 * f, h ** 5 * f ** 2, c11)


def _s22(F, h, f, c11=0):
    return _case4(F, h, f, 0, -h ** 2, h, h ** 2, h ** 4 * f, c11)


def _s23(F, h, p, c11=0):
    f = -h ** -3 * (h ** 2 + h * p + p ** 2)
    v = (h ** 3 - p ** 3) / (h * p)
    q = (h ** 5 + h ** 4 * p + h ** 3 * p ** 2 - h * p ** 4 - p ** 5) / (h ** 2 * p)
    return _case4(F, h, f, v, -h * p, p, q, -p * (h ** 2 + h * p + p ** 2), c11)


# id -> (parameter names, field, builder, nonzero parameters)
SOLUTIONS = {
    "1.1": (("f", "v"), QQ, _s11, ("f",)),
    "1.2a": (("p",), QQ, lambda F, p: _s12(F, p, F(-1)), ("p",)),
    "1.2b": (("p",), FIELD_I, lambda F, p: _s12(F, p, F.gen), ("p",)),
    "1.3a": (("v",), FIELD_J, _s13a, ("v",)),
    "2.1": (("h", "f"), QQ, _s21, ("h", "f")),
    "2.2": (("h", "f"), QQ, _s22, ("h", "f")),
    "2.3": (("h", "p"), QQ, _s23, ("h", "p")),
}

# Exact sample points; each avoids roots of unity in g1/g2 and keeps 1+v+w != 0.
SAMPLES = {
    "1.1": [{"f": 2, "v": 5}, {"f": 3, "v": 2}, {"f": "1/2", "v": -2}, {"f": -2, "v": 3}],
    "1.2a": [{"p": 2}, {"p": 3}, {"p": "1/2"}, {"p": -2}],
    "1.2b": [{"p": 2}, {"p": 3}, {"p": "1/2"}, {"p": -2}],
    "1.3a": [{"v": 2}, {"v": 3}, {"v": "1/2"}, {"v": -2}],
    "2.1": [{"h": 2, "f": 3}, {"h": 3, "f": 2}, {"h": "1/2", "f": 5}, {"h": -2, "f": 3}],
    "2.2": [{"h": 2, "f": 3}, {"h": 3, "f": 5}, {"h": "1/2", "f": -2}, {"h": -2, "f": 2}],
    "2.3": [{"h": 2, "p": 3}, {"h": 3, "p": 5}, {"h": "1/2", "p": 2}, {"h": -2, "p": 3}],
}

PERTURBABLE = ("g1", "g2", "t", "v", "w", "p", "q", "r")


def solution_params(sid, values, c11=0):
    """GenericParams of a solution family at the given values (strings or numbers)."""
    if sid not in SOLUTIONS:
        raise KeyError("unknown solution %r (known: %s)" % (sid, ", ".join(SOLUTIONS)))
    names, F, build, nz = SOLUTIONS[sid]
    values = dict(values)
    if sid == "2.3" and "f" in values:
        f = values.pop("f")
        P = solution_params(sid, values, c11)
        if F(rational(str(f))) != P.extra["f"]:
            raise ValueError("f is determined by h and p here: f = %s" % F.fmt(P.extra["f"]))
        return P
    missing = [n for n in names if n not in values]
    extra = [n for n in values if n not in names]
    if missing or extra:
        raise ValueError("solution %s takes parameters %s" % (sid, ", ".join(names)))
    args = {n: F(rational(str(values[n]))) for n in names}
    for n in nz:
        if not args[n]:
            raise ValueError("solution %s needs %s != 0" % (sid, n))
    if sid == "2.3" and args["h"] == args["p"]:
        raise ValueError("solution 2.3 needs h != p (h = p is solution 2.2)")
    if sid.startswith("2"):
        return build(F, *(args[n] for n in names), c11=F(c11))
    return build(F, *(args[n] for n in names))


def residual_report(sid, values, c11=0):
    """(params, nonzero residuals) for a solution at one sample."""
    P = solution_params(sid, values, c11)
    return P, nonzero(si_residuals(coeff_tables(P)))


def perturbation_report(P):
    """For each of g1, g2, t, v, w, p, q, r: does adding 1 make some residual nonzero?

    The coefficient tables are rebuilt from the perturbed parameters, so the
    check covers the closed-form dependence of b and x on them.
    """
    out = {}
    for name in PERTURBABLE:
        Q = P.replace(**{name: getattr(P, name) + 1})
        if not (Q.g1 and Q.g2 and Q.t):
            out[name] = True
            continue
        out[name] = bool(nonzero(si_residuals(coeff_tables(Q))))
    return out


def relations_text(P):
    """r3 and r4 of the algebra attached to the parameters, as presentation lines."""
    F = P.field
    from .tables import a_table, y_table
    def poly(tab):
        parts = []
        for idx, c in sorted(tab.items()):
            if c:
                parts.append("(%s)*%s" % (F.fmt(c), "*".join("z%d" % i for i in idx)))
        return " + ".join(parts)
    return poly(a_table(P)), poly(y_table(P))
