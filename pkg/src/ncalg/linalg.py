"""Exact sparse linear algebra over the coefficient fields.

Vectors are dicts {column: value} without zero entries; columns are ints.
"""
import heapq


def axpy(y, a, x):
    """y += a*x in place (sparse)."""
    for c, v in x.items():
        nv = y.get(c, 0) + a * v
        if nv:
            y[c] = nv
        else:
            y.pop(c, None)
    return y


def scale(x, a):
    return {c: v * a for c, v in x.items()}


class Echelon:
    """Rows in echelon form keyed by pivot (least column), pivot entries 1.

    Each row may carry a payload vector that is transformed alongside it,
    which records how the row was produced from the inputs.
    """

    def __init__(self):
        self.rows = {}
        self.payload = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        """Return (remainder, coeffs) with v = remainder + sum coeffs[p] * rows[p]."""
        rows = self.rows
        v = dict(v)
        heap = [c for c in v if c in rows]
        heapq.heapify(heap)
        coeffs = {}
        while heap:
            c = heapq.heappop(heap)
            a = v.pop(c, None)
            if a is None:
                continue
            coeffs[c] = a
            for col, x in rows[c].items():
                if col == c:
                    continue
                old = v.get(col)
                nv = (-a * x) if old is None else old - a * x
                if nv:
                    if old is None and col in rows:
                        heapq.heappush(heap, col)
                    v[col] = nv
                elif old is not None:
                    del v[col]
        return v, coeffs

    def combine_payload(self, coeffs, base=None):
        out = dict(base) if base else {}
        for p, a in coeffs.items():
            axpy(out, -a, self.payload[p])
        return out

    def insert_reduced(self, rem, payload=None):
        p = min(rem)
        inv = 1 / rem[p] if rem[p] != 1 else None
        if inv is None:
            self.rows[p] = rem
            self.payload[p] = payload or {}
        else:
            self.rows[p] = scale(rem, inv)
            self.payload[p] = scale(payload, inv) if payload else {}
        return p

    def add(self, v, payload=None):
        """Insert v; returns its new pivot, or None when v is in the span."""
        rem, coeffs = self.reduce(v)
        if not rem:
            return None
        if payload is not None:
            payload = self.combine_payload(coeffs, payload)
        return self.insert_reduced(rem, payload)

    def contains(self, v):
        return not self.reduce(v)[0]

    def express(self, v):
        """Coefficients of v on the payloads: v = sum c_p * image(payload_p); None if v is outside."""
        rem, coeffs = self.reduce(v)
        if rem:
            return None
        out = {}
        for p, a in coeffs.items():
            axpy(out, a, self.payload[p])
        return out


def rank(vectors):
    e = Echelon()
    for v in vectors:
        if v:
            e.add(v)
    return len(e)


def kernel_and_image(images):
    """Elimination of a map given by the images of domain basis vectors 0..n-1.

    Returns (echelon, kernel) where echelon rows span the image with payloads
    giving a preimage supported on the independent domain vectors, and kernel
    lists (j, vector) with vector[j] = 1 and all other entries on earlier
    independent domain vectors.
    """
    ech = Echelon()
    kernel = []
    for j, img in enumerate(images):
        rem, coeffs = ech.reduce(img)
        combo = ech.combine_payload(coeffs, {j: 1})
        if rem:
            ech.insert_reduced(rem, combo)
        else:
            kernel.append((j, combo))
    return ech, kernel


def solve_dense(M, b, F):
    """Solve M x = b for square invertible M (lists); raises ValueError if singular."""
    n = len(M)
    A = [[F(x) for x in row] + [F(y)] for row, y in zip(M, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [A[r][n] for r in range(n)]


def inverse_dense(M, F):
    n = len(M)
    cols = []
    for k in range(n):
        cols.append(solve_dense(M, [1 if i == k else 0 for i in range(n)], F))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def det_dense(M, F):
    n = len(M)
    A = [[F(x) for x in row] for row in M]
    d = F.one
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return F.zero
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            d = -d
        d = d * A[col][col]
        inv = 1 / A[col][col]
        for r in range(col + 1, n):
            if A[r][col]:
                f = A[r][col] * inv
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return d
