"""Gale transforms, the face criterion, and co-facet enumeration."""

from fractions import Fraction

import pytest

from gencut.complexes import boundary, from_facets, simplex, subsets_of, turtle
from gencut.errors import NotFullDimensional
from gencut.gale import cofacets, gale, is_face, turtle_gale
from gencut.hull import hull
from gencut.linalg import mat_vec, rank
from gencut.polytopes import gcut_vertices, marg_vertices

PATH = from_facets([1, 2, 3], [[1, 2], [2, 3]])


def test_gale_single_vertex_complex():
    gt = gale(gcut_vertices(simplex(1)))
    assert gt.kernel_dim == 0
    assert all(v == () for v in gt.rows.values())
    assert is_face(gt, [(1,)])
    assert is_face(gt, [(), (1,)])


def test_gale_requires_full_dimensional():
    with pytest.raises(NotFullDimensional):
        gale(marg_vertices(PATH))


def test_gale_kernel_dims():
    assert gale(gcut_vertices(turtle(3, 2))).kernel_dim == 2
    assert gale(gcut_vertices(PATH)).kernel_dim == 2
    assert all(len(v) == 2 for v in gale(gcut_vertices(PATH)).rows.values())


def test_gale_rows_annihilate_homogenized_matrix():
    for cx in (PATH, turtle(3, 3), turtle(4, 2)):
        vm = gcut_vertices(cx)
        gt = gale(vm)
        homog = [[1] * len(vm.col_labels)] + vm.entries
        stacked = [list(gt.rows[lab]) for lab in gt.col_labels]
        cols = [list(c) for c in zip(*stacked)]
        for vec in cols:
            assert all(v == 0 for v in mat_vec(homog, vec))


def test_turtle_gale_closed_form():
    gt = turtle_gale(3, 2)
    assert gt.rows[()] == (1, 0)
    assert gt.rows[(1,)] == (-1, 0)
    assert gt.rows[(3,)] == (0, -1)
    assert gt.rows[(1, 3)] == (0, 1)


def test_turtle_gale_alpha_annihilates():
    """Each closed-form kernel coordinate vector kills the homogenized matrix."""
    for (n, k) in [(3, 2), (4, 2), (4, 3), (3, 3)]:
        cx = turtle(n, k)
        vm = gcut_vertices(cx)
        gt = turtle_gale(n, k)
        homog = [[1] * len(vm.col_labels)] + vm.entries
        for t in range(gt.kernel_dim):
            vec = [gt.rows[lab][t] for lab in gt.col_labels]
            assert all(v == 0 for v in mat_vec(homog, vec))


def test_turtle_gale_matches_generic_gale():
    """Same row space of the stacked kernel matrices (basis-independent check)."""
    for (n, k) in [(3, 2), (4, 2), (3, 3)]:
        generic = gale(gcut_vertices(turtle(n, k)))
        closed = turtle_gale(n, k)
        a = [list(generic.rows[lab]) for lab in generic.col_labels]
        b = [list(closed.rows[lab]) for lab in closed.col_labels]
        cols_a = [list(c) for c in zip(*a)]
        cols_b = [list(c) for c in zip(*b)]
        assert rank(cols_a + cols_b) == generic.kernel_dim == closed.kernel_dim


def test_is_face_examples():
    gt = turtle_gale(3, 2)
    all_cols = set(gt.col_labels)
    # co-facet {d^emptyset, d^{1}}: complement is a face
    assert is_face(gt, all_cols - {(), (1,)})
    # single leftover vertex with nonzero transform row: not a face
    assert not is_face(gt, all_cols - {(1,)})
    assert is_face(gt, all_cols)


def test_turtle_cofacets_are_parity_pairs():
    for (n, k) in [(3, 2), (3, 3), (4, 2)]:
        gt = turtle_gale(n, k)
        eye = set(turtle(n, k).facet_intersection())
        cfs = cofacets(gt)
        expected = set()
        for s in subsets_of(range(1, n + 1)):
            for t in subsets_of(range(1, n + 1)):
                if (set(s) & eye == set(t) & eye
                        and len(s) % 2 == 0 and len(t) % 2 == 1):
                    expected.add((s, t))
        got = set()
        for cf in cfs:
            assert len(cf.labels) == 2
            a, b = cf.labels
            if len(a) % 2 == 1:
                a, b = b, a
            got.add((a, b))
        assert got == expected


def test_simplex_cofacets_are_singletons():
    gt = gale(gcut_vertices(simplex(2)))
    cfs = cofacets(gt)
    assert sorted(cf.labels for cf in cfs) == [((),), ((1,),), ((1, 2),), ((2,),)]


def test_d22_cofacets_are_directed_cycles():
    from gencut.complexes import d_mn
    from gencut.hrep import build_g2, enumerate_cycles

    gt = gale(gcut_vertices(d_mn(2, 2)))
    got = {frozenset(cf.labels) for cf in cofacets(gt)}
    cycles = {frozenset(c.edges) for c in enumerate_cycles(build_g2(2, 2))}
    assert got == cycles


def test_cofacets_match_oracle_tight_complements():
    for cx in (PATH, boundary(3), from_facets([1, 2], [[1], [2]])):
        vm = gcut_vertices(cx)
        res = hull([col for _, col in vm.columns()])
        complements = set()
        for a, b in res.facets:
            tight = {S for j, S in enumerate(vm.col_labels)
                     if sum(ai * vm.entries[i][j] for i, ai in enumerate(a)) == b}
            complements.add(tuple(sorted(set(vm.col_labels) - tight,
                                         key=lambda s: (len(s), s))))
        got = {tuple(sorted(cf.labels, key=lambda s: (len(s), s)))
               for cf in cofacets(gale(vm))}
        assert got == complements
