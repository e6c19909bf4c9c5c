"""Coefficient tables a, b, c, y, x of m3 and m4 on the basis a_i, b_j, g_i, d."""
from itertools import product

IDX = (1, 2)


class Tables:
    def __init__(self, params, a, b, c, y, x):
        self.params = params
        self.a, self.b, self.c, self.y, self.x = a, b, c, y, x
        F = params.field
        self.Lambda = {(1, 1): params.g1, (2, 2): params.g2, (1, 2): F.zero, (2, 1): F.zero}

    def get(self, name, idx):
        return getattr(self, name).get(idx, self.params.field.zero)

    def replace(self, name, idx, value):
        new = {k: dict(getattr(self, k)) for k in "abcyx"}
        new[name][idx] = value
        return Tables(self.params, **new)


def a_table(P):
    return {(1, 2, 2): P.field.one, (2, 1, 2): P.v, (2, 2, 1): P.w}


def b_table(P):
    """b_{iqjk}: coefficient of g_i in m3 with b2 in position q (3: last, 2: middle, 1: first)."""
    g1, g2, v, w = P.g1, P.g2, P.v, P.w
    return {
        (1, 3, 2, 2): P.field.one, (2, 3, 1, 2): v, (2, 3, 2, 1): w,
        (2, 2, 2, 1): g1, (1, 2, 2, 2): g2 * v, (2, 2, 1, 2): g2 * w,
        (1, 1, 2, 2): g2 ** 2 * w, (2, 1, 1, 2): g2 * g1, (2, 1, 2, 1): g1 * g2 * v,
    }


def y_table(P):
    one = P.field.one
    if P.case == 5:
        return {(1, 1, 1, 2): one, (1, 1, 2, 1): P.p, (1, 2, 1, 1): P.q, (2, 1, 1, 1): P.r}
    if P.case == 4:
        return {(1, 2, 1, 2): one, (2, 1, 1, 2): P.p, (2, 1, 2, 1): P.q, (2, 2, 1, 1): P.r}
    raise ValueError("no algebras in case %r" % P.case)


def x_case5(P):
    """Closed form of x_{i s j k h} for case 5 with all c_{pi} = 0."""
    g1, g2, p, q, r = P.g1, P.g2, P.p, P.q, P.r
    x = {
        (1, 1, 2, 1, 1): -g1 ** 3 * g2 ** 3 * r, (2, 1, 1, 1, 1): -g1 ** 4 * g2 ** 2,
        (1, 1, 1, 1, 2): -g1 ** 3 * g2 ** 3 * p, (1, 1, 1, 2, 1): -g1 ** 3 * g2 ** 3 * q,
        (1, 2, 1, 2, 1): -g1 ** 2 * g2 ** 3 * r, (1, 2, 2, 1, 1): -g1 ** 3 * g2 ** 2,
        (2, 2, 1, 1, 1): -g1 ** 3 * g2 ** 2 * p, (1, 2, 1, 1, 2): -g1 ** 2 * g2 ** 3 * q,
        (1, 3, 1, 2, 1): -g1 ** 2 * g2 ** 2, (1, 3, 2, 1, 1): -g1 ** 2 * g2 ** 2 * p,
        (2, 3, 1, 1, 1): -g1 ** 2 * g2 ** 2 * q, (1, 3, 1, 1, 2): -g1 * g2 ** 3 * r,
        (1, 4, 1, 1, 2): -g1 * g2 ** 2, (1, 4, 2, 1, 1): -g1 * g2 ** 2 * q,
        (1, 4, 1, 2, 1): -g1 * g2 ** 2 * p, (2, 4, 1, 1, 1): -g1 * g2 ** 2 * r,
    }
    return {k: v for k, v in x.items() if v}


def x_from_si5(P, a, c, y):
    """Solve the first four SI(5a) families for x, position 4 down to position 1."""
    F = P.field
    z = F.zero
    A = lambda *k: a.get(k, z)
    C = lambda *k: c.get(k, z)
    Y = lambda *k: y.get(k, z)
    r = lambda s, h: P.g(s) if s == h else z
    x = {}
    X = lambda *k: x.get(k, z)
    quads = list(product(IDX, repeat=4))
    for i, j, k, h in quads:
        x[(i, 4, j, k, h)] = A(i, j, k) * C(2, h) - A(j, k, h) * C(1, i) + P.t * Y(i, j, k, h)
    for i, j, k, h in quads:
        x[(i, 3, j, k, h)] = A(i, j, k) * C(3, h) + sum((r(s, h) * X(s, 4, i, j, k) for s in IDX), z)
    for i, j, k, h in quads:
        x[(i, 2, j, k, h)] = sum((r(s, h) * X(s, 3, i, j, k) for s in IDX), z)
    for i, j, k, h in quads:
        x[(i, 1, j, k, h)] = -C(1, i) * A(j, k, h) + sum((r(s, h) * X(s, 2, i, j, k) for s in IDX), z)
    return {k: v for k, v in x.items() if v}


def coeff_tables(P, x_source=None):
    """All coefficient tables for the parameters; x is the closed form in case 5 unless x_source='si5'."""
    a = a_table(P)
    b = b_table(P)
    c = dict(P.c)
    y = y_table(P)
    if x_source is None:
        x_source = "closed" if P.case == 5 and not c else "si5"
    if x_source == "closed":
        if P.case != 5:
            raise ValueError("closed-form x-table exists only for case 5")
        x = x_case5(P)
    else:
        x = x_from_si5(P, a, c, y)
    return Tables(P, a, b, c, y, x)
