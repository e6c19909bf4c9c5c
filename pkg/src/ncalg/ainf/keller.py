"""Relations recovered from the higher products on Ext^1."""
from itertools import product

from ..freealg import NCPoly
from ..linalg import Echelon
from ..rewrite import complete


def keller_relations(E, pres):
    """Relations of each degree n read off m_n on (E^1)^(x n), one per basis element of E^2.

    The E^1 basis is matched with the generators in order.
    """
    F = E.field
    ones = [i for i, b in enumerate(E.basis) if b.s == 1]
    if len(ones) != pres.ngens:
        raise ValueError("E^1 has dimension %d but there are %d generators" % (len(ones), pres.ngens))
    for g, i in enumerate(ones):
        if E.basis[i].md != tuple(pres.degrees[g]):
            raise ValueError("E^1 basis element %s does not match generator %s"
                             % (E.basis[i].name, pres.names[g]))
    twos = [i for i, b in enumerate(E.basis) if b.s == 2]
    out = {}
    for n in range(2, E.arity_bound + 1):
        rels = {j: {} for j in twos if E.basis[j].md[0] == n}
        if not rels:
            continue
        for tup in product(range(len(ones)), repeat=n):
            val = E.m(tuple(ones[g] for g in tup))
            for j, c in val.items():
                if j not in rels:
                    raise ValueError("m%d on E^1 leaves E^2" % n)
                rels[j][tuple(tup)] = c
        out[n] = [NCPoly(rels[j], F) for j in sorted(rels)]
    return out


def canonical_span(polys, key):
    """Reduced echelon basis of a span, leading (largest) words with coefficient 1."""
    words = sorted({w for p in polys for w in p.terms}, key=key, reverse=True)
    if not words:
        return []
    col = {w: i for i, w in enumerate(words)}
    e = Echelon()
    for p in polys:
        e.add({col[w]: c for w, c in p.terms.items()})
    piv = sorted(e.rows)
    rows = {p: dict(e.rows[p]) for p in piv}
    for p in reversed(piv):
        for q in piv:
            if q < p and rows[q].get(p):
                c = rows[q][p]
                for kk, x in rows[p].items():
                    nv = rows[q].get(kk, 0) - c * x
                    if nv:
                        rows[q][kk] = nv
                    else:
                        rows[q].pop(kk, None)
    F = polys[0].field
    return [NCPoly({words[k]: x for k, x in rows[p].items()}, F) for p in piv]


def relations_match(E, pres):
    """Compare recovered and input relation spans degree by degree, modulo lower-degree relations.

    Returns {n: (recovered canonical basis, input canonical basis, equal?)}.
    """
    rec = keller_relations(E, pres)
    result = {}
    degs = sorted({pres.word_degree(next(iter(r.terms)))[0] for r in pres.relations} | set(rec))
    for n in degs:
        if n > E.arity_bound:
            continue
        lower = pres.with_relations([r for r in pres.relations
                                     if pres.word_degree(next(iter(r.terms)))[0] < n])
        sysm = complete(lower, n)
        mine = [NCPoly(sysm.nf_terms(p.terms), pres.field) for p in rec.get(n, [])]
        given = [NCPoly(sysm.nf_terms(r.terms), pres.field) for r in pres.relations
                 if pres.word_degree(next(iter(r.terms)))[0] == n]
        a = canonical_span([p for p in mine if p], sysm.key)
        b = canonical_span([p for p in given if p], sysm.key)
        result[n] = (a, b, a == b)
    return result
