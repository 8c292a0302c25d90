"""Exact simplex and the relative-interior test."""

import random
from fractions import Fraction

from gencut.lp import lp_max, zero_in_relint


def test_lp_basic_optimum():
    # max x + y st x + y + s = 4, x - y + t = 2
    status, val, x = lp_max([1, 1, 0, 0],
                            [[1, 1, 1, 0], [1, -1, 0, 1]],
                            [4, 2])
    assert status == "optimal" and val == 4


def test_lp_infeasible():
    status, _, _ = lp_max([1], [[1], [1]], [1, 2])
    assert status == "infeasible"


def test_lp_unbounded():
    status, _, _ = lp_max([1, 0], [[0, 1]], [1])
    assert status == "unbounded"


def test_lp_degenerate_redundant_rows():
    status, val, _ = lp_max([1, 1], [[1, 1], [2, 2]], [1, 2])
    assert status == "optimal" and val == 1


def test_lp_exact_fractions():
    status, val, x = lp_max([Fraction(1, 3)], [[Fraction(2, 7)]], [Fraction(1, 5)])
    assert status == "optimal"
    assert val == Fraction(1, 3) * Fraction(7, 10)


def test_zero_in_relint_basics():
    assert zero_in_relint([(1,), (-1,)])
    assert not zero_in_relint([(1,), (2,)])
    assert not zero_in_relint([(1, 0), (0, 1)])
    assert zero_in_relint([(1, 0), (-1, 1), (0, -1)])
    # on the boundary, not the relative interior
    assert not zero_in_relint([(0, 0, 1), (0, 0, -1), (1, 0, 0)])
    assert not zero_in_relint([])


def test_zero_in_relint_origin_and_r0():
    assert zero_in_relint([(0, 0)])
    assert zero_in_relint([()])          # R^0: the origin itself
    assert zero_in_relint([(), ()])


def _zero_in_conv_by_caratheodory(vecs):
    """Independent exact membership test for 0 in conv(vecs) in the plane:
    try every subset of at most 3 points and solve the barycentric system."""
    from itertools import combinations

    from gencut.linalg import solve

    for size in (1, 2, 3):
        for sub in combinations(vecs, size):
            A = [[v[r] for v in sub] for r in range(2)] + [[1] * size]
            lam = solve(A, [0, 0, 1])
            if lam is not None and all(l >= 0 for l in lam):
                return True
    return False


def test_zero_in_relint_randomized_one_sided_checks():
    rng = random.Random(20240818)
    from itertools import product

    for _ in range(300):
        n = rng.randint(1, 4)
        vecs = [tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(n)]
        got = zero_in_relint(vecs)
        # any strictly positive rational combination hitting 0 forces True
        grid_hit = any(
            all(sum(Fraction(w) * v[r] for w, v in zip(weights, vecs)) == 0
                for r in range(2))
            for weights in product([1, 2, 3], repeat=n))
        if grid_hit:
            assert got
        # relative interior is inside the hull
        if got:
            assert _zero_in_conv_by_caratheodory(vecs)
