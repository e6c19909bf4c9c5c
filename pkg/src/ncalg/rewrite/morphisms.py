"""Checking algebra homomorphisms and complexes of free modules over a quotient algebra."""
import re

from ..freealg import NCPoly, ParseError
from ..linalg import Echelon


class HomomorphismReport:
    def __init__(self, ok, failures):
        self.ok = ok
        self.failures = failures  # (relation index, image normal form)

    def __bool__(self):
        return self.ok


def evaluate(poly, images, tgt):
    """Image of a source polynomial under generator images, in normal form."""
    out = {}
    one = tgt.field.one
    for w, c in poly.terms.items():
        acc = {(): one}
        for g in w:
            acc = tgt.mul_terms(acc, images[g].terms)
        for u, x in acc.items():
            nv = out.get(u, 0) + c * x
            if nv:
                out[u] = nv
            else:
                out.pop(u, None)
    return out


def verify_homomorphism(src, tgt, images):
    """Check that generator images respect degrees and kill every source relation."""
    if len(images) != src.ngens:
        raise ValueError("need one image per source generator")
    images = [im if im.field == tgt.field else NCPoly({w: tgt.field(c) for w, c in im.terms.items()}, tgt.field)
              for im in images]
    for g, im in enumerate(images):
        nf = tgt.nf_terms(im.terms)
        for w in nf:
            if tgt.degree(w) != src.degrees[g][0]:
                raise ValueError("image of %s is not of degree %d" % (src.names[g], src.degrees[g][0]))
    failures = []
    for k, r in enumerate(src.relations):
        rr = NCPoly({w: tgt.field(c) for w, c in r.terms.items()}, tgt.field)
        nf = evaluate(rr, images, tgt)
        if nf:
            failures.append((k, NCPoly(nf, tgt.field)))
    return HomomorphismReport(not failures, failures)


class FreeComplex:
    """A sequence of free modules (lists of generator shifts) and maps between consecutive ones.

    maps[k] is a matrix over the algebra from modules[k] to modules[k+1]; row a,
    column b holds the coefficient of the b-th target generator in the image of
    the a-th source generator (left modules, so f*e_a maps to sum f*M[a][b] e_b).
    """

    def __init__(self, names, modules, maps):
        self.names = names
        self.modules = modules
        self.maps = maps


class ComplexReport:
    def __init__(self, is_complex, homology, failures):
        self.is_complex = is_complex
        self.homology = homology  # position -> [dims by degree]
        self.failures = failures


def verify_complex(cx, sysm, N=None):
    N = sysm.bound if N is None else N
    failures = []
    for k, M in enumerate(cx.maps):
        src, tgt = cx.modules[k], cx.modules[k + 1]
        for a, row in enumerate(M):
            for b, e in enumerate(row):
                for w in e:
                    if sysm.degree(w) != src[a] - tgt[b]:
                        raise ValueError("map %d entry (%d,%d) has the wrong degree" % (k, a, b))
    for k in range(len(cx.maps) - 1):
        A, B = cx.maps[k], cx.maps[k + 1]
        for a in range(len(A)):
            for c in range(len(B[0]) if B else 0):
                acc = {}
                for b in range(len(B)):
                    for w, x in sysm.mul_terms(A[a][b], B[b][c]).items():
                        nv = acc.get(w, 0) + x
                        if nv:
                            acc[w] = nv
                        else:
                            acc.pop(w, None)
                if acc:
                    failures.append((k, a, c, NCPoly(acc, sysm.field)))
    homology = {}
    ranks = {}
    for k, M in enumerate(cx.maps):
        ranks[k] = [_rank_in_degree(cx.modules[k], cx.modules[k + 1], M, sysm, n) for n in range(N + 1)]
    for k, mod in enumerate(cx.modules):
        dims = []
        for n in range(N + 1):
            dim = sum(len(sysm.standard_monomials(n - s)) for s in mod if n - s >= 0)
            out = ranks[k][n] if k in ranks else 0
            inc = ranks[k - 1][n] if k - 1 in ranks else 0
            dims.append(dim - out - inc)
        homology[k] = dims
    return ComplexReport(not failures, homology, failures)


def _rank_in_degree(src, tgt, M, sysm, n):
    idx = {}
    e = Echelon()
    one = sysm.field.one
    for a, s in enumerate(src):
        if n - s < 0:
            continue
        for w in sysm.standard_monomials(n - s):
            v = {}
            for b in range(len(tgt)):
                for u, x in sysm.mul_terms({w: one}, M[a][b]).items():
                    key = idx.setdefault((b, u), len(idx))
                    v[key] = x
            if v:
                e.add(v)
    return len(e)


def parse_complex(text, pres):
    """Parse a maps file.

        module P1 : 1 1
        module P0 : 0
        map P1 -> P0
        row z1
        row z2

    Modules are listed in chain order; each map goes to the next module.
    """
    names, modules, maps = [], [], []
    current = None
    for ln, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        kw, _, rest = body.partition(" ")
        if kw == "module":
            m = re.match(r"(\w+)\s*:\s*(.*)$", rest.strip())
            if not m:
                raise ParseError("expected 'module NAME : shifts'", ln, 1)
            names.append(m.group(1))
            try:
                modules.append([int(x) for x in m.group(2).replace(",", " ").split()])
            except ValueError:
                raise ParseError("module shifts must be integers", ln, 1)
        elif kw == "map":
            m = re.match(r"(\w+)\s*->\s*(\w+)$", rest.strip())
            if not m or m.group(1) not in names or m.group(2) not in names:
                raise ParseError("expected 'map SRC -> TGT' between declared modules", ln, 1)
            s, t = names.index(m.group(1)), names.index(m.group(2))
            if t != s + 1 or s != len(maps):
                raise ParseError("maps must connect consecutive modules in order", ln, 1)
            current = []
            maps.append(current)
        elif kw == "row":
            if current is None:
                raise ParseError("row outside a map", ln, 1)
            col0 = raw.index("row") + 4
            entries = _split_top(rest)
            row = []
            off = col0
            for ent in entries:
                row.append(pres.parse_poly(ent, ln).terms if ent.strip() else {})
                off += len(ent) + 1
            current.append(row)
        else:
            raise ParseError("unknown directive %r" % kw, ln, 1)
    for k, M in enumerate(maps):
        if len(M) != len(modules[k]) or any(len(r) != len(modules[k + 1]) for r in M):
            raise ParseError("map %s -> %s has the wrong shape" % (names[k], names[k + 1]))
    return FreeComplex(names, modules, maps)


def _split_top(s):
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out
