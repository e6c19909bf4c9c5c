"""Frobenius data of an Ext algebra with dimension pattern 1;2;1,1;2;1."""
from ..linalg import Echelon, inverse_dense
from .structure import MissingEntry

TYPE_12221 = {(0, 0): 1, (1, 1): 2, (2, 3): 1, (2, 4): 1, (3, 6): 2, (4, 7): 1}


class NotFrobenius(ValueError):
    pass


def dims_by_degree(E):
    out = {}
    for b in E.basis:
        out[(b.s, b.md[0])] = out.get((b.s, b.md[0]), 0) + 1
    return out


def check_frobenius(E):
    """True when E has a one-dimensional top degree and m_2 pairs E nondegenerately into it."""
    top = max(b.s for b in E.basis)
    tops = [i for i, b in enumerate(E.basis) if b.s == top]
    if len(tops) != 1 or top == 0:
        return False
    t = tops[0]
    n = len(E.basis)
    e = Echelon()
    for x in range(n):
        row = {}
        for y in range(n):
            if E.basis[x].s + E.basis[y].s != top:
                continue
            c = E.m((x, y)).get(t)
            if c:
                row[y] = c
        if not row or e.add(row) is None:
            return False
    return len(e) == n


class FrobeniusData:
    def __init__(self, structure, Lambda, t):
        self.structure = structure   # the A-infinity structure in the basis 1, a1, a2, b1, b2, g1, g2, d
        self.Lambda = Lambda         # r_ij with g_i a_j = r_ij d
        self.t = t                   # b2 b1 = t d, with b1 b2 = d

    @property
    def eigenvalues(self):
        L = self.Lambda
        if L[0][1] or L[1][0]:
            return None
        return L[0][0], L[1][1]


def frobenius_data(E):
    """Normalize the basis: d spans the top, b1 b2 = d, g dual to a (a_i g_j = delta_ij d).

    b1 is scaled so the coefficient of b1 in m3(a1,a2,a2) is 1 and d so that
    the coefficient of b2 in m4(a1,a1,a1,a2) (or else m4(a1,a2,a1,a2)) is 1,
    whenever those products are nonzero and available.
    """
    F = E.field
    if dims_by_degree(E) != TYPE_12221:
        raise NotFrobenius("dimension pattern is not 1;2;1,1;2;1")
    sl = {}
    for i, b in enumerate(E.basis):
        sl.setdefault((b.s, b.md[0]), []).append(i)
    unit = sl[(0, 0)][0]
    a1, a2 = sl[(1, 1)]
    b1, = sl[(2, 3)]
    b2, = sl[(2, 4)]
    c1, c2 = sl[(3, 6)]
    d, = sl[(4, 7)]
    one = F.one

    def coef(tup, j):
        try:
            return E.m(tup).get(j, F.zero)
        except MissingEntry:
            return F.zero

    sb1 = coef((a1, a2, a2), b1) or one
    # vectors in old coordinates
    B1 = {b1: sb1}
    k = coef((b1, b2), d) * sb1
    if not k:
        raise NotFrobenius("b1*b2 vanishes")
    lam = one
    y = coef((a1, a1, a1, a2), b2) or coef((a1, a2, a1, a2), b2)
    if y:
        # m4(...) = y * b2_old = y*k/lam * (lam/k * b2_old); make the new coefficient 1
        lam = y * k
    D = {d: lam}
    B2 = {b2: lam / k}
    P = [[coef((a, c), d) for c in (c1, c2)] for a in (a1, a2)]
    try:
        Pinv = inverse_dense(P, F)
    except ValueError:
        raise NotFrobenius("pairing E^1 x E^3 -> E^4 is degenerate")
    G = []
    for j in range(2):
        G.append({c: lam * Pinv[kk][j] for kk, c in enumerate((c1, c2)) if Pinv[kk][j]})
    vectors = [{unit: one}, {a1: one}, {a2: one}, B1, B2, G[0], G[1], D]
    names = ["1", "a1", "a2", "b1", "b2", "g1", "g2", "d"]
    S = E.change_basis(vectors, names)
    tval = S.m((4, 3)).get(7, F.zero)
    if S.m((3, 4)).get(7) != 1:
        raise ArithmeticError("normalization failed")
    Lambda = [[S.m((5 + i, 1 + j)).get(7, F.zero) for j in range(2)] for i in range(2)]
    return FrobeniusData(S, Lambda, tval)
