"""Independent brute-force computations used as test oracles."""
from fractions import Fraction
from itertools import product


def rank(rows):
    """Rank of a list of {column: Fraction} rows by plain Gaussian elimination."""
    pivots = {}
    r = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                r += 1
                break
            p = pivots[col]
            f = row[col] / p[col]
            for k, v in p.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def quotient_dims(ngens, relations, n_max):
    """dim of the degree-n part of k<z>/(relations) for degree-one generators.

    relations are dicts word -> coefficient; the ideal in degree n is spanned
    by u*r*v directly, with no rewriting.
    """
    out = [1]
    for n in range(1, n_max + 1):
        rows = []
        for r in relations:
            d = len(next(iter(r)))
            for k in range(n - d + 1):
                for u in product(range(ngens), repeat=k):
                    for v in product(range(ngens), repeat=n - d - k):
                        rows.append({u + w + v: Fraction(c) for w, c in r.items()})
        cols = {}
        rows = [{cols.setdefault(w, len(cols)): c for w, c in row.items()} for row in rows]
        out.append(ngens ** n - rank(rows))
    return out


def in_ideal(word_terms, relations, n):
    """Is the degree-n polynomial in the span of u*r*v?"""
    rows = []
    for r in relations:
        d = len(next(iter(r)))
        for k in range(n - d + 1):
            for u in product((0, 1), repeat=k):
                for v in product((0, 1), repeat=n - d - k):
                    rows.append({u + w + v: Fraction(c) for w, c in r.items()})
    cols = {}
    enc = lambda row: {cols.setdefault(w, len(cols)): c for w, c in row.items()}
    base = [enc(r) for r in rows]
    return rank(base) == rank(base + [enc(word_terms)])
