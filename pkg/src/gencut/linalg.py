"""Exact rational linear algebra on plain lists of Fractions.

Everything here is deterministic: row echelon forms pick the first usable
pivot, kernel bases come from the free columns in index order, and integer
kernels use unimodular column reduction.  No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def mat_mul(A, B):
    """Matrix product of two list-of-list matrices (handles empty shapes)."""
    n = len(A)
    k = len(A[0]) if A else 0
    m = len(B[0]) if B else 0
    if A and B and len(B) != k:
        raise ValueError("shape mismatch in mat_mul")
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a == 0:
                continue
            Bt = B[t]
            for j in range(m):
                if Bt[j]:
                    row[j] += a * Bt[j]
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def vec_mat(v, A):
    m = len(A[0]) if A else 0
    out = [0] * m
    for a, row in zip(v, A):
        if a == 0:
            continue
        for j in range(m):
            if row[j]:
                out[j] += a * row[j]
    return out


def identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def rref(A):
    """Reduced row echelon form.

    Returns (R, pivots) where pivots lists the pivot column of each nonzero
    row.  The input is not modified.
    """
    R = [[Fraction(x) for x in row] for row in A]
    rows = len(R)
    cols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        piv = R[r][c]
        R[r] = [x / piv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(A):
    return len(rref(A)[1])


def kernel_basis(A):
    """Basis of the right kernel {x : A x = 0}, one vector per free column.

    The basis vector for free column j has a 1 in position j; this is the
    deterministic RREF free-column basis.
    """
    cols = len(A[0]) if A else 0
    if cols == 0:
        return []
    R, pivots = rref(A)
    pivot_set = set(pivots)
    basis = []
    for j in range(cols):
        if j in pivot_set:
            continue
        v = [Fraction(0)] * cols
        v[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][j]
        basis.append(v)
    return basis


def solve(A, b):
    """One solution of A x = b with free variables set to 0, or None."""
    cols = len(A[0]) if A else 0
    aug = [list(row) + [bv] for row, bv in zip(A, b)]
    R, pivots = rref(aug)
    for r in range(len(pivots)):
        if pivots[r] == cols:
            return None  # pivot in the constant column: inconsistent
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = R[r][cols]
    return x


def det(A):
    """Determinant via fraction-free Bareiss after clearing denominators."""
    n = len(A)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    M = []
    for row in A:
        row = [Fraction(x) for x in row]
        l = 1
        for x in row:
            l = l * x.denominator // gcd(l, x.denominator)
        scale *= l
        M.append([int(x * l) for x in row])
    prev = 1
    sign = 1
    M = [row[:] for row in M]
    for k in range(n - 1):
        if M[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if pr is None:
                return Fraction(0)
            M[k], M[pr] = M[pr], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return Fraction(sign * M[n - 1][n - 1], 1) / scale


def integer_kernel_basis(A):
    """Z-basis of {x in Z^n : A x = 0} for an integer matrix A.

    Unimodular column reduction: gcd-eliminate each row across the active
    columns; the columns of the accumulated transform that end up annihilated
    form a lattice basis of the kernel (not merely a rational basis).
    """
    rows = len(A)
    n = len(A[0]) if A else 0
    M = [[int(x) for x in row] for row in A]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_op(j, k, a, b, c, d):
        # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
        for i in range(rows):
            M[i][j], M[i][k] = a * M[i][j] + b * M[i][k], c * M[i][j] + d * M[i][k]
        for i in range(n):
            U[i][j], U[i][k] = a * U[i][j] + b * U[i][k], c * U[i][j] + d * U[i][k]

    start = 0
    for r in range(rows):
        j = next((c for c in range(start, n) if M[r][c] != 0), None)
        if j is None:
            continue
        for k in range(j + 1, n):
            if M[r][k] == 0:
                continue
            a, b = M[r][j], M[r][k]
            g, x, y = _xgcd(a, b)
            # unimodular: [x, -b/g; y, a/g] has determinant 1
            col_op(j, k, x, y, -b // g, a // g)
        if j != start:
            col_op(start, j, 0, 1, 1, 0)  # swap
        start += 1
        if start == n:
            break
    return [[U[i][c] for i in range(n)] for c in range(start, n)]


def lattice_row_basis(vectors):
    """Basis of the lattice generated (over Z) by the given rational vectors.

    Unimodular integer row reduction after clearing denominators; the nonzero
    rows of the reduction form the basis.  Used for volume normalization: the
    result is the affine lattice spanned by a polytope's vertex differences,
    which may be a proper sublattice of (linear span) intersect Z^n.
    """
    if not vectors:
        return []
    n = len(vectors[0])
    scale = 1
    fr = [[Fraction(x) for x in v] for v in vectors]
    for v in fr:
        for x in v:
            scale = scale * x.denominator // gcd(scale, x.denominator)
    M = [[int(x * scale) for x in v] for v in fr]

    def row_op(i, j, a, b, c, d):
        M[i], M[j] = ([a * x + b * y for x, y in zip(M[i], M[j])],
                      [c * x + d * y for x, y in zip(M[i], M[j])])

    r = 0
    rows = len(M)
    for c in range(n):
        pr = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        for i in range(r + 1, rows):
            if M[i][c] == 0:
                continue
            a, b = M[r][c], M[i][c]
            g, x, y = _xgcd(a, b)
            row_op(r, i, x, y, -b // g, a // g)
        r += 1
        if r == rows:
            break
    return [[Fraction(x, scale) for x in row] for row in M[:r]]


def _xgcd(a, b):
    """Extended gcd: returns (g, x, y) with a*x + b*y = g > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def primitive(vec):
    """Scale a rational vector by a positive rational to a primitive integer
    vector (gcd of entries 1).  The zero vector is returned as integer zeros."""
    fracs = [Fraction(x) for x in vec]
    l = 1
    for x in fracs:
        l = l * x.denominator // gcd(l, x.denominator)
    ints = [int(x * l) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints
