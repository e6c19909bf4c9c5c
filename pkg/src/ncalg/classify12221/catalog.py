"""Named two-generator algebras with Hilbert series 1/((1-t)^2 (1-t^2)(1-t^3)) candidates."""
from ..freealg import parse_presentation, rational

GRADING = ("gen z1 : (1,1,0)", "gen z2 : (1,0,1)")

FIELDS = {
    "Q": "Q",
    "i": "Q[i]/(i^2+1)",
    "j": "Q[j]/(j^2-j+1)",
}

_R4_A = "z1^3*z2 + p*z1^2*z2*z1 + p^2*z1*z2*z1^2 + p^3*z2*z1^3"

TEMPLATES = {
    "A": (("p",), "Q", ["z1*z2^2 - p^2*z2^2*z1", _R4_A]),
    "B": (("p",), "i", ["z1*z2^2 + i*p^2*z2^2*z1", _R4_A]),
    "C": (("p",), "j", ["z1*z2^2 + p*z2*z1*z2 + p^2*z2^2*z1", "z1^3*z2 + j*p^3*z2*z1^3"]),
    "D": (("v", "p"), "Q", ["z1*z2^2 + v*z2*z1*z2 + p^2*z2^2*z1",
                            "z1^3*z2 + (v+p)*z1^2*z2*z1 + (p^2+p*v)*z1*z2*z1^2 + p^3*z2*z1^3"]),
    "X": (("p", "h"), "Q", ["z1*z2^2 + (p-h)*z2*z1*z2 - h*p*z2^2*z1",
                            "z1*z2*z1*z2 + p*z2*z1^2*z2 + h*p*z2*z1*z2*z1 + h*p^2*z2^2*z1^2"]),
    "Y": (("h", "f"), "Q", ["z1*z2^2 - h^2*z2^2*z1",
                            "z1*z2*z1*z2 + h*z2*z1^2*z2 + h^2*z2*z1*z2*z1 + h^4*f*z2^2*z1^2"]),
    "Z": (("p", "h"), "Q", ["z1*z2^2 + (h^3-p^3)/(h*p)*z2*z1*z2 - h*p*z2^2*z1",
                            "z1*z2*z1*z2 + p*z2*z1^2*z2 - p*(h^2+h*p+p^2)*z2^2*z1^2"
                            " + (h^5+h^4*p+h^3*p^2-h*p^4-p^5)/(h^2*p)*z2*z1*z2*z1"]),
    "O": ((), "Q", ["z2^2*z1", "z2*z1^3", "z2*z1*z2*z1^2"]),
}

NONZERO = {"A": ("p",), "B": ("p",), "C": ("p",), "D": ("p",), "X": (), "Y": ("h",), "Z": ("p", "h")}


def _field_line(name, field=None):
    return "field " + (field or FIELDS[name])


def catalog(name, params=None, field=None):
    """Presentation of a named algebra; params maps parameter names to values (strings or numbers)."""
    if name == "Ore":
        return ore_presentation(params, field)
    if name not in TEMPLATES:
        raise KeyError("unknown catalog entry %r" % name)
    names, fkey, rels = TEMPLATES[name]
    params = dict(params or {})
    missing = [n for n in names if n not in params]
    if missing:
        raise ValueError("%s needs parameter(s) %s" % (name, ", ".join(missing)))
    extra = [n for n in params if n not in names]
    if extra:
        raise ValueError("%s takes no parameter(s) %s" % (name, ", ".join(extra)))
    lines = [_field_line(fkey, field)]
    for n in names:
        lines.append("param %s = %s" % (n, params[n]))
    lines += list(GRADING)
    lines += ["rel " + r for r in rels]
    pres = parse_presentation("\n".join(lines) + "\n")
    for n in NONZERO.get(name, ()):
        if pres.params[n] == 0:
            raise ValueError("%s(%s) needs %s != 0" % (name, ", ".join(str(params[x]) for x in names), n))
    return pres


def ore_roots(v, p):
    """c, d with c + d = v and c*d = p^2, as a field line and expressions."""
    from ..freealg.field import _rational_sqrt
    v, p = rational(str(v)), rational(str(p))
    disc = v * v - 4 * p * p
    s = _rational_sqrt(disc)
    if s is not None:
        c = (v + s) / 2
        return "Q", str(c), str(v - c)
    return "Q[c]/(c^2 - %s*c + %s)" % (v, p * p), "c", "%s - c" % v


def ore_presentation(params, field=None):
    """Iterated Ore extension isomorphic to D(v, p): generators x, y of degrees 2, 3."""
    v, p = params["v"], params["p"]
    fline, c, d = ore_roots(v, p)
    lines = ["field " + (field or fline), "param p = %s" % p]
    if c != "c":
        lines.append("param c = %s" % c)
    lines.append("param d = %s" % d)
    lines += ["gen x : (2,1,1)", "gen y : (3,2,1)"] + list(GRADING)
    lines += [
        "rel y*x + p*x*y",
        "rel x*z2 + d*z2*x",
        "rel y*z2 - p^2*z2*y",
        "rel z1*x + d*x*z1 - y",
        "rel z1*y + p*y*z1",
        "rel z1*z2 + c*z2*z1 - x",
    ]
    return parse_presentation("\n".join(lines) + "\n")


def ore_maps(ore, dpres):
    """Generator images D -> Ore and Ore -> D as polynomial lists."""
    to_ore = [ore.parse_poly("z1"), ore.parse_poly("z2")]
    # express the images over the Ore field inside D
    c, d = ore.params.get("c", ore.field.gen), ore.params["d"]
    F = ore.field
    from ..freealg import NCPoly, Presentation
    D = Presentation(F, dpres.names, dpres.degrees,
                     [NCPoly({w: F(x) for w, x in r.terms.items()}, F) for r in dpres.relations],
                     {k: F(x) for k, x in dpres.params.items()})
    x = D.parse_poly("z1*z2") + D.parse_poly("z2*z1") * c
    z1 = D.parse_poly("z1")
    y = z1 * x + x * z1 * d
    return to_ore, [x, y, z1, D.parse_poly("z2")], D


MAPS = {
    # a free resolution of k over B(1), as right-multiplication matrices of left modules
    "B1": ("B", {"p": 1}, """module P4 : 7
module P3 : 6 6
module P2 : 3 4
module P1 : 1 1
module P0 : 0
map P4 -> P3
row z1, z2
map P3 -> P2
row z1^2*z2 + z1*z2*z1 + z2*z1^2, i*z2^2
row z1^3, -z2*z1
map P2 -> P1
row i*z2^2, z1*z2
row z1^2*z2 + z1*z2*z1 + z2*z1^2, z1^3
map P1 -> P0
row z1
row z2
"""),
    "C1": ("C", {"p": 1}, """module P4 : 7
module P3 : 6 6
module P2 : 3 4
module P1 : 1 1
module P0 : 0
map P4 -> P3
row z1, z2
map P3 -> P2
row -j*z1^2*z2, z2^2
row -j^2*z1^3, z1*z2 + z2*z1
map P2 -> P1
row z2^2, z1*z2 + z2*z1
row j*z2*z1^2, z1^3
map P1 -> P0
row z1
row z2
"""),
}
