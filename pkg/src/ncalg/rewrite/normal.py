"""Normal elements: a is normal when z*a lies in a*A_1 and a*z in A_1*a for every generator z."""
from itertools import combinations, permutations, product

from ..freealg import NCPoly, roots_in_field
from ..linalg import Echelon, kernel_and_image


class NormalityReport:
    def __init__(self, normal, left, right, failures):
        self.normal = normal
        self.left = left      # i -> c with z_i a = c a z_i (None when not a scalar multiple)
        self.right = right    # i -> c with a z_i = c z_i a
        self.failures = failures

    def __bool__(self):
        return self.normal


def _index(words_index, w):
    j = words_index.get(w)
    if j is None:
        j = words_index[w] = len(words_index)
    return j


def _vec(terms, idx):
    return {_index(idx, w): c for w, c in terms.items()}


def _ratio(x, y):
    """c with x = c*y for sparse vectors, or None."""
    if not y:
        return None if x else 0
    p = next(iter(y))
    c = x.get(p, 0) / y[p]
    for k in set(x) | set(y):
        if x.get(k, 0) != c * y.get(k, 0):
            return None
    return c


def is_normal(a, sysm):
    md = a.multidegree(sysm.pres.degrees)
    if md is None:
        raise ValueError("element is not homogeneous")
    F = sysm.field
    at = sysm.nf_terms(a.terms)
    if not at:
        raise ValueError("element is zero in the algebra")
    left, right, failures = {}, {}, []
    normal = True
    for i in range(sysm.pres.ngens):
        d = sysm.pres.degrees[i][0]
        z = {(i,): F.one}
        za = sysm.mul_terms(z, at)
        az = sysm.mul_terms(at, z)
        idx = {}
        span_r, span_l = Echelon(), Echelon()
        for w in sysm.standard_monomials(d):
            span_r.add(_vec(sysm.mul_terms(at, {w: F.one}), idx))
            span_l.add(_vec(sysm.mul_terms({w: F.one}, at), idx))
        vza, vaz = _vec(za, idx), _vec(az, idx)
        if not span_r.contains(vza):
            normal = False
            failures.append("%s*a is not in a*A_%d" % (sysm.pres.names[i], d))
        if not span_l.contains(vaz):
            normal = False
            failures.append("a*%s is not in A_%d*a" % (sysm.pres.names[i], d))
        left[i] = _ratio(vza, vaz)
        right[i] = _ratio(vaz, vza)
    return NormalityReport(normal, left, right, failures)


# --- search ----------------------------------------------------------------

def _polymul(p, q, F):
    out = [F.zero] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] = out[i + j] + x * y
    return out


def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _polymod(p, q, F):
    p = _trim(p)
    q = _trim(q)
    while len(p) >= len(q):
        f = p[-1] / q[-1]
        s = len(p) - len(q)
        for k, y in enumerate(q):
            p[s + k] = p[s + k] - f * y
        p = _trim(p)
    return p


def _polygcd(p, q, F):
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, _polymod(p, q, F)
    if p:
        lc = p[-1]
        p = [x / lc for x in p]
    return p


def _perm_sign(perm):
    s = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            s = -s
    return s


def _pencil_gcd(M, N, F):
    """gcd over all maximal minors of M - c*N (rows d <= columns), as a polynomial in c."""
    d = len(M)
    ncols = len(M[0]) if M else 0
    g = []
    for cols in combinations(range(ncols), d):
        det = [F.zero]
        for perm in permutations(range(d)):
            term = [F.one]
            for r in range(d):
                c = cols[perm[r]]
                term = _polymul(term, [M[r][c], -N[r][c]], F)
            s = _perm_sign(perm)
            det = [x + s * y for x, y in zip(det + [F.zero] * (len(term) - len(det)),
                                             term + [F.zero] * (len(det) - len(term)))]
        g = _polygcd(g, det, F) if g else _trim(det)
        if g and len(g) == 1:
            return g
    return g


def _left_kernel(rows, d):
    """Left kernel of a d x X matrix given as d sparse row vectors."""
    _, ker = kernel_and_image(rows)
    return [v for _, v in ker]


def _rows_of(mats, coefs, d):
    rows = [dict() for _ in range(d)]
    off = 0
    for (M, N), c in zip(mats, coefs):
        width = len(M[0]) if M else 0
        for r in range(d):
            for k in range(width):
                x = M[r][k] - c * N[r][k] if c is not None else M[r][k]
                if x:
                    rows[r][off + k] = x
            if c is None:
                for k in range(width):
                    if N[r][k]:
                        rows[r][off + width + k] = N[r][k]
        off += 2 * width
    return rows


class NormalSolution:
    def __init__(self, basis, scalars):
        self.basis = basis        # list of NCPoly
        self.scalars = scalars    # i -> c with z_i a = c a z_i, None if both products vanish

    def __repr__(self):
        return "NormalSolution(%r, %r)" % (self.basis, self.scalars)


def search_normal(sysm, multidegree, max_dim=3):
    """All normal elements of one multidegree, as a list of solution subspaces.

    The grading must separate the generators so that z_i a can only be a
    multiple of a z_i.  Then a is normal iff each pair (z_i a, a z_i) is
    proportional with both or neither zero.
    """
    pres = sysm.pres
    F = sysm.field
    if len(set(pres.degrees)) != pres.ngens:
        raise ValueError("generators must have distinct multidegrees")
    basis = sysm.standard_monomials(tuple(multidegree))
    d = len(basis)
    if d == 0:
        return []
    if d > max_dim:
        raise ValueError("dimension %d exceeds the supported %d" % (d, max_dim))
    mats = []
    for i in range(pres.ngens):
        z = {(i,): F.one}
        idx = {}
        left = [_vec(sysm.mul_terms(z, {m: F.one}), idx) for m in basis]
        right = [_vec(sysm.mul_terms({m: F.one}, z), idx) for m in basis]
        width = len(idx)
        M = [[F(row.get(k, 0)) for k in range(width)] for row in left]
        N = [[F(row.get(k, 0)) for k in range(width)] for row in right]
        mats.append((M, N))
    choices = []
    for i, (M, N) in enumerate(mats):
        opts = [None]
        K0 = _left_kernel(_rows_of([(M, N)], [None], d), d)
        comp = _complement_rows(K0, d, F)
        Mc = [[sum((u.get(r, 0) * M[r][k] for r in range(d)), F.zero) for k in range(len(M[0]))] for u in comp]
        Nc = [[sum((u.get(r, 0) * N[r][k] for r in range(d)), F.zero) for k in range(len(N[0]))] for u in comp]
        if comp:
            if len(M[0]) < len(comp):
                raise ValueError("singular pencil for generator %s" % pres.names[i])
            g = _pencil_gcd(Mc, Nc, F)
            if not g:
                raise ValueError("singular pencil for generator %s" % pres.names[i])
            for c in roots_in_field(g, F):
                if c:
                    opts.append(c)
        choices.append(opts)
    found = []
    for combo in product(*choices):
        rows = [dict() for _ in range(d)]
        off = 0
        for (M, N), c in zip(mats, combo):
            part = _rows_of([(M, N)], [c], d)
            for r in range(d):
                for k, x in part[r].items():
                    rows[r][off + k] = x
            off += 2 * len(M[0])
        ker = _left_kernel(rows, d)
        if not ker:
            continue
        found.append((ker, combo))
    out = []
    spaces = []
    for ker, combo in found:
        e = Echelon()
        for v in ker:
            e.add(v)
        spaces.append((e, ker, combo))
    for k, (e, ker, combo) in enumerate(spaces):
        contained = False
        for m, (e2, ker2, _) in enumerate(spaces):
            if m != k and all(e2.contains(v) for v in ker) and (len(ker2) > len(ker) or m < k):
                contained = True
                break
        if contained:
            continue
        vecs = _rref(ker, d, F)
        polys = [NCPoly({basis[r]: c for r, c in v.items()}, F) for v in vecs]
        out.append(NormalSolution(polys, dict(enumerate(combo))))
    return out


def _complement_rows(K0, d, F):
    e = Echelon()
    for v in K0:
        e.add(v)
    comp = []
    for r in range(d):
        if e.add({r: F.one}) is not None:
            comp.append({r: F.one})
    return comp


def _rref(vecs, d, F):
    e = Echelon()
    for v in vecs:
        e.add(v)
    piv = sorted(e.rows)
    rows = {p: dict(e.rows[p]) for p in piv}
    for p in reversed(piv):
        for q in piv:
            if q != p and rows[q].get(p):
                c = rows[q][p]
                for k, x in rows[p].items():
                    nv = rows[q].get(k, 0) - c * x
                    if nv:
                        rows[q][k] = nv
                    else:
                        rows[q].pop(k, None)
    return [rows[p] for p in piv]
