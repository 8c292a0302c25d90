"""Exact rational linear programming (two-phase simplex, Bland's rule).

Bland's pivoting rule (smallest eligible index, ties in the ratio test broken
by smallest basic variable) guarantees termination without any tolerance,
which is what makes the relative-interior test below a decision procedure.
"""

from __future__ import annotations

from fractions import Fraction


def _pivot(T, basis, i, j, ncols):
    piv = T[i][j]
    T[i] = [x / piv for x in T[i]]
    for k in range(len(T)):
        if k != i and T[k][j] != 0:
            f = T[k][j]
            row = T[i]
            T[k] = [x - f * y for x, y in zip(T[k], row)]
    basis[i] = j


def _run(T, basis, cost, ncols):
    """Maximize cost over the current tableau. Returns value or None (unbounded)."""
    m = len(T)
    r = [Fraction(x) for x in cost]
    obj = Fraction(0)
    for i in range(m):
        cb = cost[basis[i]]
        if cb:
            for j in range(ncols):
                r[j] -= cb * T[i][j]
            obj += cb * T[i][ncols]
    while True:
        j = next((j for j in range(ncols) if r[j] > 0), None)
        if j is None:
            return obj
        best = None
        for i in range(m):
            if T[i][j] > 0:
                key = (T[i][ncols] / T[i][j], basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return None
        i = best[1]
        rj = r[j]
        _pivot(T, basis, i, j, ncols)
        for k in range(ncols):
            r[k] -= rj * T[i][k]
        obj += rj * T[i][ncols]


def lp_max(c, A, b):
    """Maximize c.x subject to A x = b, x >= 0.

    Returns (status, value, x) with status one of "optimal", "infeasible",
    "unbounded".  All arithmetic is exact.
    """
    m = len(A)
    n = len(c)
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]

    if m == 0:
        if any(Fraction(x) > 0 for x in c):
            return "unbounded", None, None
        return "optimal", Fraction(0), [Fraction(0)] * n

    # Phase 1: artificials n..n+m-1, maximize minus their sum.
    N = n + m
    T = [A[i] + [Fraction(1) if k == i else Fraction(0) for k in range(m)] + [b[i]]
         for i in range(m)]
    basis = [n + i for i in range(m)]
    cost1 = [Fraction(0)] * n + [Fraction(-1)] * m
    value = _run(T, basis, cost1, N)
    if value is None or value < 0:
        return "infeasible", None, None
    for i in range(m):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is not None:
                _pivot(T, basis, i, j, N)

    # Phase 2: drop artificial columns and rows still pinned to artificials
    # (those rows are 0 = 0 after phase 1).
    keep = [i for i in range(m) if basis[i] < n]
    T = [T[i][:n] + [T[i][N]] for i in keep]
    basis = [basis[i] for i in keep]
    cost2 = [Fraction(x) for x in c]
    value = _run(T, basis, cost2, n)
    if value is None:
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = T[i][n]
    return "optimal", value, x


def zero_in_relint(vectors):
    """Is the origin in the relative interior of conv(vectors)?

    Decided by maximizing t subject to sum(lam_i * v_i) = 0, sum(lam_i) = 1,
    lam_i >= t; the origin is in the relative interior iff the optimum is
    positive.  Vectors of length 0 live in R^0, whose only point is the
    origin, so any nonempty collection passes.
    """
    vecs = [list(v) for v in vectors]
    n = len(vecs)
    if n == 0:
        return False
    k = len(vecs[0])
    # lam_i = mu_i + t, t = tp - tm; variables (mu_1..mu_n, tp, tm) >= 0.
    colsum = [sum(v[r] for v in vecs) for r in range(k)]
    A = []
    b = []
    for r in range(k):
        A.append([v[r] for v in vecs] + [colsum[r], -colsum[r]])
        b.append(Fraction(0))
    A.append([Fraction(1)] * n + [Fraction(n), Fraction(-n)])
    b.append(Fraction(1))
    c = [Fraction(0)] * n + [Fraction(1), Fraction(-1)]
    status, value, _ = lp_max(c, A, b)
    return status == "optimal" and value > 0
