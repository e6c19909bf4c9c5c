"""Residuals of the SI(4)-SI(6) equation families on coefficient tables."""
from itertools import product

IDX = (1, 2)


def si_residuals(T):
    """Map family name -> {index tuple: residual}; every residual is kept, zero or not."""
    P = T.params
    z = P.field.zero
    a = lambda *k: T.a.get(k, z)
    b = lambda *k: T.b.get(k, z)
    c = lambda *k: T.c.get(k, z)
    y = lambda *k: T.y.get(k, z)
    x = lambda *k: T.x.get(k, z)
    r = lambda s, k: T.Lambda[(s, k)]
    t = P.t
    g = P.g
    out = {"4a": {}, "4b": {}, "5a": {}, "5c": {}, "6a": {}}
    for i, j, k in product(IDX, repeat=3):
        out["4a"][(1, i, j, k)] = a(i, j, k) - b(i, 3, j, k)
        out["4a"][(2, i, j, k)] = b(i, 2, j, k) - sum((r(s, k) * b(s, 3, i, j) for s in IDX), z)
        out["4a"][(3, i, j, k)] = b(i, 1, j, k) - sum((r(s, k) * b(s, 2, i, j) for s in IDX), z)
        out["4a"][(4, i, j, k)] = -t * a(i, j, k) - sum((r(s, k) * b(s, 1, i, j) for s in IDX), z)
        out["4b"][(i, j, k)] = -t * a(i, j, k) - sum(
            (r(s, k) * r(u2, j) * r(u, i) * a(u, u2, s) for s, u2, u in product(IDX, repeat=3)), z)
    for i, j, k, h in product(IDX, repeat=4):
        out["5a"][(1, i, j, k, h)] = (a(i, j, k) * c(2, h) - a(j, k, h) * c(1, i) + t * y(i, j, k, h)
                                      - x(i, 4, j, k, h))
        out["5a"][(2, i, j, k, h)] = (a(i, j, k) * c(3, h) + r(1, h) * x(1, 4, i, j, k)
                                      + r(2, h) * x(2, 4, i, j, k) - x(i, 3, j, k, h))
        out["5a"][(3, i, j, k, h)] = (r(1, h) * x(1, 3, i, j, k) + r(2, h) * x(2, 3, i, j, k)
                                      - x(i, 2, j, k, h))
        out["5a"][(4, i, j, k, h)] = (c(1, i) * a(j, k, h) - r(1, h) * x(1, 2, i, j, k)
                                      - r(2, h) * x(2, 2, i, j, k) + x(i, 1, j, k, h))
        out["5a"][(5, i, j, k, h)] = (a(j, k, h) * c(2, i) - a(i, j, k) * c(3, h)
                                      - r(1, h) * x(1, 1, i, j, k) - r(2, h) * x(2, 1, i, j, k)
                                      + y(i, j, k, h))
        out["5c"][(i, j, k, h)] = (1 - t * g(i) * g(j) * g(k) * g(h)) * y(i, j, k, h)
    for s, i, j, k, h, m, n in product(IDX, repeat=7):
        out["6a"][(s, i, j, k, h, m, n)] = (
            -a(i, j, k) * x(s, 1, h, m, n) + a(j, k, h) * x(s, 2, i, m, n)
            - a(k, h, m) * x(s, 3, i, j, n) + a(h, m, n) * x(s, 4, i, j, k)
            + b(s, 1, m, n) * y(i, j, k, h) - b(s, 2, i, n) * y(j, k, h, m)
            + b(s, 3, i, j) * y(k, h, m, n))
    return out


def nonzero(res):
    """Only the nonzero residuals, as {family: {index: value}}."""
    return {f: {k: v for k, v in d.items() if v} for f, d in res.items() if any(d.values())}
