"""Degree formulas, their pairwise consistencies, and oracle volume checks."""

import pytest

from gencut.complexes import (
    boundary,
    cone,
    d_mn,
    disjoint_union,
    from_facets,
    lawrence_lifting,
    simplex,
    turtle,
)
from gencut.degree import (
    DegreeResult,
    conjecture_lawrence,
    degree_boundary_simplex,
    degree_cone,
    degree_disjoint_simplices,
    degree_lawrence_1n,
    degree_no_three_way,
    degree_of_complex,
    degree_turtle,
)
from gencut.hrep import gcut_points
from gencut.hull import normalized_volume

SQUARE = disjoint_union(simplex(1), simplex(1).relabel({1: 2}))


def test_disjoint_simplices_values():
    assert degree_disjoint_simplices(1, 1).value == 2
    assert degree_disjoint_simplices(2, 2).value == 20
    assert normalized_volume(gcut_points(SQUARE)) == 2


def test_boundary_simplex_values():
    assert degree_boundary_simplex(3).value == 4
    assert degree_boundary_simplex(4).value == 8
    assert degree_boundary_simplex(2).value == degree_disjoint_simplices(1, 1).value
    assert normalized_volume(gcut_points(boundary(3))) == 4


def test_cone_squares():
    assert degree_cone(DegreeResult(2, "x")).value == 4
    assert degree_cone(DegreeResult(1, "simplex")).value == 1
    d = DegreeResult(3, "x")
    for _ in range(3):
        d = degree_cone(d)
    assert d.value == 3 ** 8
    assert normalized_volume(gcut_points(cone(SQUARE, 3))) == 4


def test_turtle_values():
    assert degree_turtle(3, 2).value == 4
    assert degree_turtle(4, 2).value == 16
    assert degree_turtle(5, 1).value == 1
    assert degree_turtle(4, 4).value == degree_boundary_simplex(4).value
    assert normalized_volume(gcut_points(turtle(3, 2))) == 4


def test_no_three_way_and_lawrence_1n():
    assert degree_no_three_way(2).value == 4
    assert degree_lawrence_1n(2).value == 32
    assert degree_lawrence_1n(1).value == 4
    assert degree_lawrence_1n(1).value == degree_no_three_way(2).value
    tri = lawrence_lifting(SQUARE, 3)
    assert normalized_volume(gcut_points(tri)) == 4


def test_conjecture_lawrence():
    c = conjecture_lawrence(2, 2)
    assert c.value == 4096 and c.conjectural
    assert conjecture_lawrence(1, 1).value == 4
    for n in range(1, 5):
        assert conjecture_lawrence(1, n).value == degree_lawrence_1n(n).value


def test_degree_of_complex_recognition():
    assert degree_of_complex(simplex(3)).value == 1
    assert degree_of_complex(SQUARE).formula_tag == "disjoint-simplices"
    assert degree_of_complex(turtle(4, 2)).value == 16
    assert degree_of_complex(d_mn(1, 3)).value == 4  # boundary complex plus a ghost
    got = degree_of_complex(cone(SQUARE, 3))
    assert got.value == 4

    lifted = lawrence_lifting(disjoint_union(simplex(2), simplex(2).relabel({1: 3, 2: 4})), 5)
    got = degree_of_complex(lifted)
    assert got.value == 4096 and got.conjectural

    lifted1n = lawrence_lifting(disjoint_union(simplex(1), simplex(2).relabel({1: 2, 2: 3})), 4)
    got = degree_of_complex(lifted1n)
    assert got.value == 32 and not got.conjectural


def test_degree_of_complex_volume_checked():
    for cx in (SQUARE, turtle(3, 2), boundary(3), cone(SQUARE, 3)):
        got = degree_of_complex(cx, check_volume=True)
        assert got.verified_by_volume is True


def test_degree_of_complex_oracle_fallback():
    cx = from_facets([1, 2, 3, 4], [[1, 2, 3], [3, 4], [1, 4]])
    got = degree_of_complex(cx)
    assert got.formula_tag == "volume" and got.verified_by_volume
    assert got.value == normalized_volume(gcut_points(cx))


def test_cone_squaring_against_oracle_exhaustive():
    """volume(cone polytope) = volume(base polytope)^2 for every complex on
    up to 3 vertices with at least one nonempty face."""
    from gencut.complexes import all_complexes

    for cx in all_complexes([1, 2, 3]):
        if not cx.faces:
            continue
        apex = max(cx.ground_set) + 1
        v_base = normalized_volume(gcut_points(cx), max_dim=16)
        v_cone = normalized_volume(gcut_points(cone(cx, apex)), max_dim=16)
        assert v_cone == v_base ** 2


def test_dimension_equals_face_count_exhaustive():
    from gencut.complexes import all_complexes
    from gencut.hull import hull
    from gencut.errors import Degenerate

    for cx in all_complexes([1, 2, 3, 4]):
        try:
            res = hull(gcut_points(cx), max_dim=16)
        except Degenerate:
            assert len(cx.faces) == 0
            continue
        assert res.dim == len(cx.faces)
