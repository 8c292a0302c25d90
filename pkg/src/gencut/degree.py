"""Closed-form toric-ideal degrees for the solved families.

The degree of the binary hierarchical model equals the normalized volume of
its polytope, so every formula here can be cross-checked against the hull
oracle while the instances stay desk-sized; ``degree_of_complex`` does that
on request.  The general Lawrence-lifting value is a conjecture and is always
flagged as such, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import SimplicialComplex
from .errors import TooLarge
from .hrep import _facet_components, gcut_points
from .hull import normalized_volume


@dataclass
class DegreeResult:
    value: int
    formula_tag: str
    conjectural: bool = False
    verified_by_volume: bool | None = None


def degree_disjoint_simplices(m: int, n: int) -> DegreeResult:
    """Two disjoint full simplices: binomial(2^m + 2^n - 2, 2^m - 1)."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    return DegreeResult(comb(2 ** m + 2 ** n - 2, 2 ** m - 1), "disjoint-simplices")


def degree_boundary_simplex(n: int) -> DegreeResult:
    """Boundary of the simplex on [n]: 2^(n-1)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return DegreeResult(2 ** (n - 1), "boundary-simplex")


def degree_cone(base: DegreeResult) -> DegreeResult:
    """Coning squares the degree."""
    return DegreeResult(base.value ** 2, f"cone({base.formula_tag})",
                        conjectural=base.conjectural)


def degree_turtle(n: int, k: int) -> DegreeResult:
    """Turtle complexes: 2^((k-1) * 2^(n-k))."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return DegreeResult(2 ** ((k - 1) * 2 ** (n - k)), "turtle")


def degree_no_three_way(n: int) -> DegreeResult:
    """No-three-way interaction model on states (2, 2, n): n * 2^(n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return DegreeResult(n * 2 ** (n - 1), "no-three-way")


def degree_lawrence_1n(n: int) -> DegreeResult:
    """Lawrence lifting of a point and an n-simplex: 2^(2^n + n - 1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return DegreeResult(2 ** (2 ** n + n - 1), "lawrence-1n")


def conjecture_lawrence(m: int, n: int) -> DegreeResult:
    """Conjectured general Lawrence-lifting degree 2^(m(2^n - 1) + n(2^m - 1)).

    Reported, never asserted; agrees with the proven m = 1 family and with
    the computed (2, 2) value 4096.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    return DegreeResult(2 ** (m * (2 ** n - 1) + n * (2 ** m - 1)),
                        "conjecture-lawrence", conjectural=True)


def _match_lawrence_two_simplices(cx: SimplicialComplex):
    """Recognize a relabeled Lawrence lifting of two disjoint simplices."""
    if len(cx.facets) != 3:
        return None
    for apex_candidate in cx.vertices():
        with_apex = [F for F in cx.facets if apex_candidate in F]
        without = [F for F in cx.facets if apex_candidate not in F]
        if len(with_apex) != 2 or len(without) != 1:
            continue
        a = tuple(x for x in with_apex[0] if x != apex_candidate)
        b = tuple(x for x in with_apex[1] if x != apex_candidate)
        if not a or not b or set(a) & set(b):
            continue
        if tuple(sorted(a + b)) == without[0]:
            return len(a), len(b)
    return None


def degree_of_complex(cx: SimplicialComplex, check_volume: bool = False,
                      max_points=None, max_dim=None) -> DegreeResult:
    """Degree by family recognition, or by oracle volume as a last resort.

    Raises TooLarge when no formula applies and the polytope exceeds the
    oracle caps.
    """
    result = _recognize_degree(cx)
    if result is None:
        vol = normalized_volume(gcut_points(cx), max_points=max_points, max_dim=max_dim)
        return DegreeResult(vol, "volume", verified_by_volume=True)
    if check_volume and not result.conjectural:
        vol = normalized_volume(gcut_points(cx), max_points=max_points, max_dim=max_dim)
        if vol != result.value:
            raise RuntimeError(
                f"formula {result.formula_tag} gives {result.value} but volume is {vol}")
        result.verified_by_volume = True
    return result


def _recognize_degree(cx: SimplicialComplex):
    if not cx.faces:
        return DegreeResult(1, "point")
    if len(cx.facets) == 1:
        return DegreeResult(1, "simplex")

    comps = _facet_components(cx)
    if len(comps) == 2 and all(len(c) == 1 for c in comps):
        return degree_disjoint_simplices(len(comps[0][0]), len(comps[1][0]))

    verts = cx.vertices()
    if len(cx.facets) >= 2 and all(len(F) == len(verts) - 1 for F in cx.facets):
        return degree_turtle(len(verts), len(cx.facets))

    lawrence = _match_lawrence_two_simplices(cx)
    if lawrence is not None:
        m, n = sorted(lawrence)
        if m == 1:
            return degree_lawrence_1n(n)
        return conjecture_lawrence(m, n)

    eye = cx.facet_intersection()
    if eye:
        from .complexes import from_facets

        base_facets = [tuple(x for x in F if x not in eye) for F in cx.facets]
        base = from_facets(sorted(set(verts) - set(eye)), base_facets)
        inner = _recognize_degree(base)
        if inner is not None:
            out = inner
            for _ in eye:
                out = degree_cone(out)
            return out
    return None
