"""Exact incremental convex hull with placing triangulation.

This is the independent ground truth used to certify the closed-form facet
descriptions and to compute normalized volumes.  Points are inserted in their
given order (beneath-beyond): each new point is coned over the strictly
visible boundary simplices of the current triangulation, so degenerate
positions are handled combinatorially, never by perturbation.

Input points may live in any rational ambient space; the polytope is first
reduced to exact coordinates over a lattice basis of (linear span of the
point differences) intersected with the integer lattice, so the normalized
volume of lattice polytopes comes out as an integer no matter the ambient
dimension.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import Degenerate, TooLarge
from .linalg import det, kernel_basis, lattice_row_basis, primitive, rref, solve

DEFAULT_MAX_POINTS = 64
DEFAULT_MAX_DIM = 14


@dataclass
class HullResult:
    points: list            # deduplicated input points, original order
    dim: int                 # affine dimension
    facets: list             # (integer normal tuple, integer rhs): a . x <= b
    affine_hull: list        # (integer normal tuple, integer rhs): a . x = b
    triangulation: list      # index simplices into ``points``
    normalized_volume: object  # int, or Fraction for non-lattice input


def _dedupe(points):
    seen = {}
    out = []
    for p in points:
        key = tuple(Fraction(x) for x in p)
        if key not in seen:
            seen[key] = len(out)
            out.append(list(key))
    return out


def _affine_frame(points):
    """Affine hull data: (p0, lattice basis rows, equations) and dimension.

    The lattice is the one generated by the vertex differences (the toric
    normalization: the degree of the associated toric ideal equals the volume
    in exactly this lattice).  It can be a proper sublattice of the affine
    hull intersected with Z^n.
    """
    p0 = points[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    ambient = len(p0)
    R, pivots = rref(diffs)
    d = len(pivots)
    span_rows = R[:d]
    normals = [primitive(v) for v in kernel_basis(span_rows)] if d < ambient else []
    equations = [(tuple(a), sum(ai * x for ai, x in zip(a, p0))) for a in normals]
    lattice = lattice_row_basis(diffs)
    return p0, lattice, equations, d


def _lattice_coords(points, p0, lattice):
    """Coordinates of points relative to p0 in the lattice basis."""
    d = len(lattice)
    cols = [list(row) for row in zip(*lattice)] if lattice else []
    coords = []
    for p in points:
        diff = [x - y for x, y in zip(p, p0)]
        if d == 0:
            coords.append([])
            continue
        c = solve(cols, diff)
        if c is None:
            raise RuntimeError("point outside its own affine hull (internal error)")
        coords.append(c)
    return coords


def _hyperplane_through(coords, face):
    """Unoriented hyperplane (a, b) with a . x = b through the given points."""
    rows = [list(coords[i]) + [Fraction(1)] for i in face]
    kb = kernel_basis(rows)
    if len(kb) != 1:
        raise RuntimeError("boundary face is affinely degenerate (internal error)")
    vec = kb[0]
    return vec[:-1], -vec[-1]


def _boundary_faces(simplices):
    """(d-1)-faces lying in exactly one simplex, with their opposite vertex."""
    count = Counter()
    owner = {}
    for s in simplices:
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            count[face] += 1
            owner[face] = s[i]
    return [(face, owner[face]) for face, c in count.items() if c == 1]


def _dot(a, x):
    return sum(u * v for u, v in zip(a, x))


def _placing_triangulation(coords, order=None):
    """Triangulation of the point set by incremental placing.

    ``order`` optionally permutes the insertion sequence (used by tests to
    check volume invariance); default is index order.  Returns the list of
    full-dimensional index simplices.
    """
    n = len(coords)
    d = len(coords[0])
    order = list(range(n)) if order is None else list(order)

    # initial simplex: first d+1 points that are affinely independent
    init = [order[0]]
    basis_rows = []
    rest = []
    for i in order[1:]:
        if len(init) == d + 1:
            rest.append(i)
            continue
        cand = [x - y for x, y in zip(coords[i], coords[init[0]])]
        if len(rref(basis_rows + [cand])[1]) > len(basis_rows):
            basis_rows.append(cand)
            init.append(i)
        else:
            rest.append(i)
    if len(init) != d + 1:
        raise RuntimeError("affine rank dropped during placement (internal error)")

    simplices = [tuple(sorted(init))]
    plane_cache = {}
    for ip in rest:
        p = coords[ip]
        new = []
        for face, opp in _boundary_faces(simplices):
            if face not in plane_cache:
                plane_cache[face] = _hyperplane_through(coords, face)
            a, b = plane_cache[face]
            ref = _dot(a, coords[opp])
            if ref > b:
                a, b = [-x for x in a], -b
            elif ref == b:
                raise RuntimeError("flat simplex in triangulation (internal error)")
            if _dot(a, p) > b:
                new.append(tuple(sorted(face + (ip,))))
        simplices.extend(new)
    return simplices


def hull(points, max_points=None, max_dim=None, insertion_order=None):
    """Facets, placing triangulation, and normalized volume of conv(points)."""
    max_points = DEFAULT_MAX_POINTS if max_points is None else max_points
    max_dim = DEFAULT_MAX_DIM if max_dim is None else max_dim
    pts = _dedupe(points)
    if len(pts) < 2:
        raise Degenerate("need at least 2 distinct points (volume would be 0)")
    if len(pts) > max_points:
        raise TooLarge(f"{len(pts)} points exceeds cap {max_points}")
    p0, lattice, equations, d = _affine_frame(pts)
    if d > max_dim:
        raise TooLarge(f"affine dimension {d} exceeds cap {max_dim}")
    coords = _lattice_coords(pts, p0, lattice)

    simplices = _placing_triangulation(coords, insertion_order)
    volume = Fraction(0)
    for s in simplices:
        base = coords[s[0]]
        volume += abs(det([[x - y for x, y in zip(coords[v], base)] for v in s[1:]]))
    if volume.denominator == 1:
        volume = int(volume)

    facets_c = {}
    plane_cache = {}
    for face, opp in _boundary_faces(simplices):
        if face not in plane_cache:
            plane_cache[face] = _hyperplane_through(coords, face)
        a, b = plane_cache[face]
        if _dot(a, coords[opp]) > b:
            a, b = [-x for x in a], -b
        key = tuple(primitive(list(a) + [b]))
        facets_c[key] = (key[:-1], key[-1])

    facets = []
    lattice_rows = [list(v) for v in lattice]
    for a_c, b_c in facets_c.values():
        a_o = solve(lattice_rows, list(a_c))
        if a_o is None:
            raise RuntimeError("facet normal has no ambient lift (internal error)")
        b_o = Fraction(b_c) + _dot(a_o, p0)
        vec = primitive(list(a_o) + [b_o])
        facets.append((tuple(vec[:-1]), vec[-1]))
    facets.sort()

    for a, b in facets:
        for p in pts:
            if _dot(a, p) > b:
                raise RuntimeError("facet inequality violated by an input point")

    return HullResult(points=pts, dim=d, facets=facets, affine_hull=equations,
                      triangulation=sorted(simplices),
                      normalized_volume=volume)


def normalized_volume(points, max_points=None, max_dim=None):
    """Lattice-normalized volume of conv(points); 0 for fewer than 2 distinct points."""
    if len(_dedupe(points)) < 2:
        return 0
    return hull(points, max_points=max_points, max_dim=max_dim).normalized_volume


def slow_facets(points):
    """Second-opinion facet oracle: try every d-subset of points as a hyperplane.

    Exponential in the point count; this exists so the incremental hull can be
    checked against an independent construction.
    """
    pts = _dedupe(points)
    if len(pts) < 2:
        raise Degenerate("need at least 2 distinct points")
    p0, lattice, _, d = _affine_frame(pts)
    coords = _lattice_coords(pts, p0, lattice)
    found = {}
    for sub in combinations(range(len(pts)), d):
        rows = [list(coords[i]) + [Fraction(1)] for i in sub]
        kb = kernel_basis(rows)
        if len(kb) != 1:
            continue
        a, b = kb[0][:-1], -kb[0][-1]
        vals = [_dot(a, c) - b for c in coords]
        if all(v <= 0 for v in vals):
            pass
        elif all(v >= 0 for v in vals):
            a, b = [-x for x in a], -b
        else:
            continue
        key = tuple(primitive(list(a) + [b]))
        found[key] = (key[:-1], key[-1])

    lattice_rows = [list(v) for v in lattice]
    out = set()
    for a_c, b_c in found.values():
        a_o = solve(lattice_rows, list(a_c))
        b_o = Fraction(b_c) + _dot(a_o, p0)
        vec = primitive(list(a_o) + [b_o])
        out.add((tuple(vec[:-1]), vec[-1]))
    return sorted(out)


def facets_equal(facets_a, facets_b):
    """Set equality of two facet lists after primitive normalization.

    Returns (equal, missing_from_a, extra_in_a).
    """
    def norm(fs):
        out = set()
        for a, b in fs:
            vec = primitive(list(a) + [b])
            out.add((tuple(vec[:-1]), vec[-1]))
        return out

    sa, sb = norm(facets_a), norm(facets_b)
    return sa == sb, sorted(sb - sa), sorted(sa - sb)
