"""The dual bar (cobar) DGA and its splittings T = B + H + L, slice by slice.

T^s in multidegree m has the basis e^(w1)...e^(ws) dual to bar tuples.
Multiplication is concatenation and the differential is the derivation

    D(e^(w1)...e^(ws)) = sum_i (-1)^(i-1) e^(w1)...D(e^(wi))...e^(ws),
    D(e^w) = sum over standard u, v of coeff_w(uv) e^u e^v,

which is minus the transpose of the bar differential in these bases.

A splitting fixes a complement H of the coboundaries B in the cocycles Z and
a complement L of Z; Q is zero on H and L and inverts D from L onto B.
"""
from ..barext import BarComplex
from ..linalg import Echelon, axpy, kernel_and_image, solve_dense


class Slice:
    """Splitting data for T^s in one multidegree."""

    def __init__(self, s, md, H, project, homotopy):
        self.s = s
        self.md = md
        self.H = H                  # cocycle representatives (index vectors)
        self.project = project      # x -> coordinates on H (list)
        self.homotopy = homotopy    # x -> Q(x) in T^(s-1) (index vector)


class Cobar:
    def __init__(self, sysm, policy="echelon", cap=None):
        if policy not in ("echelon", "structured"):
            raise ValueError("unknown splitting policy %r" % policy)
        self.sysm = sysm
        self.field = sysm.field
        self.policy = policy
        self.bar = BarComplex(sysm, cap)
        self._elim = {}
        self._slices = {}

    def basis(self, s, md):
        return self.bar.basis(s, md)

    def index(self, s, md):
        return self.bar.index(s, md)

    def diff_images(self, s, md):
        """Images of the T^s basis under D, as vectors on T^(s+1) indices."""
        imgs = [dict() for _ in self.bar.basis(s, md)]
        if s == 0 or not imgs:
            return imgs
        self.bar.check_cap(s + 1, md)
        for j, t in enumerate(self.bar.basis(s + 1, md)):
            for i, c in self.bar.differential_of(t, md).items():
                imgs[i][j] = -c
        return imgs

    def elim(self, s, md):
        key = (s, md)
        hit = self._elim.get(key)
        if hit is None:
            self.bar.check_cap(s, md)
            hit = kernel_and_image(self.diff_images(s, md))
            self._elim[key] = hit
        return hit

    def differential(self, s, md, x):
        imgs = None
        out = {}
        for j, c in x.items():
            if imgs is None:
                imgs = self.diff_images(s, md)
            axpy(out, c, imgs[j])
        return out

    def slice(self, s, md):
        key = (s, md)
        hit = self._slices.get(key)
        if hit is None:
            if self.policy == "structured" and s == 2:
                hit = self._structured_two(md)
            elif self.policy == "structured" and s == 3:
                hit = self._structured_three(md)
            else:
                hit = self._echelon(s, md)
            self._slices[key] = hit
        return hit

    # --- echelon policy --------------------------------------------------
    def _prev(self, s, md):
        if s == 0:
            return Echelon()
        return self.elim(s - 1, md)[0]

    def _zb_parts(self, s, md):
        prev = self._prev(s, md)
        _, kernel = self.elim(s, md)
        E = Echelon()
        E.rows = dict(prev.rows)
        E.payload = {p: None for p in prev.rows}
        hpiv = []
        for j, kv in kernel:
            p = E.add(kv)
            if p is not None:
                hpiv.append(p)
        kvec = dict(kernel)
        return prev, E, hpiv, kvec

    def _echelon(self, s, md):
        prev, E, hpiv, kvec = self._zb_parts(s, md)
        H = [E.rows[p] for p in hpiv]

        def cocycle_part(x):
            z = {}
            for j, c in x.items():
                k = kvec.get(j)
                if k is not None:
                    axpy(z, c, k)
            return z

        def project(x):
            rem, coeffs = E.reduce(cocycle_part(x))
            assert not rem
            return [coeffs.get(p, 0) for p in hpiv]

        def homotopy(x):
            rem, coeffs = E.reduce(cocycle_part(x))
            out = {}
            for p, c in coeffs.items():
                if p in prev.rows:
                    axpy(out, c, prev.payload[p])
            return out

        return Slice(s, md, H, project, homotopy)

    # --- structured policy at s = 2, 3 -------------------------------------
    def _xi_columns(self, md):
        """Indices of the tuples [z | w'] with z w' standard, keyed by the word z w'."""
        idx = self.index(2, md)
        cols = {}
        for w in self.bar.words(md):
            if len(w) >= 2:
                cols[w] = idx[((w[0],), w[1:])]
        return cols

    def _relation_cycles(self, md):
        """A basis of relation cycles R inside span{[z | v]} complementing boundaries there."""
        F = self.field
        basis2 = self.basis(2, md)
        X = [i for i, t in enumerate(basis2) if len(t[0]) == 1]
        Xset = set(X)
        # kernel of multiplication restricted to X
        idx1 = self.index(1, md)
        imgs = []
        for i in X:
            a, b = basis2[i]
            imgs.append({idx1[(w,)]: c for w, c in self.sysm.nf_word(a + b).items()})
        _, ker = kernel_and_image(imgs)
        kerX = [{X[j]: c for j, c in v.items()} for _, v in ker]
        # boundaries inside X: order columns with non-X first
        order = [i for i in range(len(basis2)) if i not in Xset] + X
        pos = {i: k for k, i in enumerate(order)}
        bnd = Echelon()
        if len(self.basis(3, md)):
            self.bar.check_cap(3, md)
            for t in self.basis(3, md):
                v = self.bar.differential_of(t, md)
                if v:
                    bnd.add({pos[i]: c for i, c in v.items()})
        nX = len(order) - len(X)
        inter = Echelon()
        for p, row in bnd.rows.items():
            if p >= nX:
                inter.rows[p] = row
        R = []
        for v in kerX:
            if inter.add({pos[i]: c for i, c in v.items()}) is not None:
                R.append(v)
        return R

    def _structured_two(self, md):
        F = self.field
        prev, E, hpiv, kvec = self._zb_parts(2, md)
        xi = self._xi_columns(md)
        xicols = set(xi.values())
        kernel = list(kvec.items())
        restricted = [{c: x for c, x in v.items() if c in xicols} for _, v in kernel]
        _, comb = kernel_and_image(restricted)
        H = []
        for _, cv in comb:
            h = {}
            for a, c in cv.items():
                axpy(h, c, kernel[a][1])
            H.append(h)
        R = self._relation_cycles(md)
        if len(R) != len(H):
            raise ArithmeticError("relation cycles and cohomology disagree in %s" % (md,))
        G = [[_pair(h, r) for r in R] for h in H]   # G[j][k] = h_j(r_k)
        Gt = [[G[j][k] for j in range(len(H))] for k in range(len(R))]
        idx1 = self.index(1, md)

        def project(x):
            if not H:
                return []
            return solve_dense(Gt, [_pair(x, r) for r in R], F)

        def homotopy(x):
            out = {}
            for w, col in xi.items():
                c = x.get(col)
                if c:
                    out[idx1[(w,)]] = c
            return out

        self.relation_cycles = getattr(self, "relation_cycles", {})
        self.relation_cycles[md] = R
        return Slice(2, md, H, project, homotopy)

    def _structured_three(self, md):
        base = self._echelon(3, md)
        two = self.slice(2, md)

        def homotopy(x):
            y = base.homotopy(x)
            if not y:
                return y
            coords = two.project(y)
            for c, h in zip(coords, two.H):
                axpy(y, -c, h)
            q = two.homotopy(y)
            axpy(y, -1, self.differential(1, md, q))
            return y

        return Slice(3, md, base.H, base.project, homotopy)


def _pair(x, r):
    acc = 0
    for i, c in r.items():
        v = x.get(i)
        if v:
            acc = acc + v * c
    return acc
