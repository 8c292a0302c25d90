"""Gale transforms, the relative-interior face test, and co-facet enumeration.

The Gale transform of a full-dimensional vertex configuration is the list of
rows of a kernel basis of the homogenized vertex matrix.  A vertex subset
spans a face exactly when the origin lies in the relative interior of the
convex hull of the complementary transform rows; with exact LP this is a
decision procedure, and inclusion-minimal co-faces (the positive circuits of
the transform) are precisely the co-facets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .complexes import subsets_of, turtle
from .errors import NotFullDimensional, TooLarge
from .linalg import kernel_basis, rank, rref
from .lp import zero_in_relint
from .polytopes import LabeledMatrix

DEFAULT_COFACET_CAP = 40


@dataclass
class GaleTransform:
    """Rows of a kernel basis of the homogenized vertex matrix.

    ``rows`` maps each column label (a vertex index, here a subset) to its
    transform vector of length (#vertices - dim - 1).  ``points`` keeps the
    original vertex columns for rank checks, and ``pivot_columns`` records the
    RREF provenance of the basis.
    """

    col_labels: tuple
    rows: dict
    points: dict
    kernel_dim: int
    pivot_columns: tuple = ()

    def vector(self, label):
        return self.rows[label]


def gale(vm: LabeledMatrix) -> GaleTransform:
    """Gale transform of a vertex matrix (free-column kernel basis of the
    homogenized matrix).  Requires the configuration to span its ambient
    space affinely, as the gcut vertices do."""
    ncols = len(vm.col_labels)
    homog = [[Fraction(1)] * ncols] + [[Fraction(x) for x in row] for row in vm.entries]
    R, pivots = rref(homog)
    if len(pivots) != len(vm.row_labels) + 1:
        raise NotFullDimensional(
            "vertex configuration is not full-dimensional in its ambient space")
    pivot_set = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][j]
        basis.append(v)
    rows = {}
    for j, lab in enumerate(vm.col_labels):
        rows[lab] = tuple(vec[j] for vec in basis)
    points = {lab: [row[j] for row in vm.entries]
              for j, lab in enumerate(vm.col_labels)}
    return GaleTransform(vm.col_labels, rows, points, len(basis), tuple(pivots))


def turtle_gale(n: int, k: int) -> GaleTransform:
    """Closed-form Gale transform of the turtle polytope:
    b_S = (-1)^(#S) e_(S cap I) with I the common facet intersection.

    Basis coordinates are indexed by the subsets of I in graded-lex order.
    """
    cx = turtle(n, k)
    eye = cx.facet_intersection()
    tsubsets = subsets_of(eye)
    tindex = {t: i for i, t in enumerate(tsubsets)}
    dim = len(tsubsets)
    cols = subsets_of(cx.ground_set)
    rows = {}
    for S in cols:
        vec = [Fraction(0)] * dim
        vec[tindex[tuple(sorted(set(S) & set(eye)))]] = Fraction((-1) ** len(S))
        rows[S] = tuple(vec)
    from .polytopes import gcut_vertices

    vm = gcut_vertices(cx)
    points = {lab: [row[j] for row in vm.entries]
              for j, lab in enumerate(vm.col_labels)}
    return GaleTransform(tuple(cols), rows, points, dim)


def is_face(gt: GaleTransform, J) -> bool:
    """Do the vertices indexed by J span a face of the polytope?

    True when J is everything, or when the origin is in the relative interior
    of the convex hull of the complementary transform rows.
    """
    jset = set(J)
    unknown = jset - set(gt.col_labels)
    if unknown:
        raise KeyError(f"unknown vertex labels: {sorted(unknown)[:3]}")
    complement = [gt.rows[lab] for lab in gt.col_labels if lab not in jset]
    if not complement:
        return True
    return zero_in_relint(complement)


def _affine_rank(points):
    if not points:
        return -1
    base = points[0]
    diffs = [[x - y for x, y in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


@dataclass
class CoFace:
    """Vertex labels NOT on a face, with the face's affine dimension."""

    labels: tuple
    face_dim: int


def cofacets(gt: GaleTransform, cap: int = DEFAULT_COFACET_CAP) -> list:
    """All co-facets: inclusion-minimal co-faces whose face has dimension dim-1.

    Enumerates candidate supports of positive circuits of the transform
    (size at most kernel_dim + 1), pruning supersets of circuits already
    found.  Exponential in the vertex count, hence the cap.
    """
    nverts = len(gt.col_labels)
    if nverts > cap:
        raise TooLarge(f"{nverts} vertices exceeds the co-facet enumeration cap {cap}")
    dim = nverts - gt.kernel_dim - 1
    found = []
    found_sets = []
    max_size = gt.kernel_dim + 1

    def sign_balanced(vecs):
        # positive dependence needs each coordinate all-zero or mixed-sign
        for r in range(gt.kernel_dim):
            pos = neg = False
            for v in vecs:
                if v[r] > 0:
                    pos = True
                elif v[r] < 0:
                    neg = True
            if pos != neg:
                return False
        return True

    for size in range(1, max_size + 1):
        for combo in combinations(range(nverts), size):
            cset = set(combo)
            if any(f <= cset for f in found_sets):
                continue
            vecs = [gt.rows[gt.col_labels[i]] for i in combo]
            if not sign_balanced(vecs):
                continue
            if zero_in_relint(vecs):
                found.append(combo)
                found_sets.append(cset)
    out = []
    for combo in found:
        labels = tuple(gt.col_labels[i] for i in combo)
        face_pts = [gt.points[lab] for lab in gt.col_labels if lab not in set(labels)]
        fdim = _affine_rank(face_pts)
        if fdim == dim - 1:
            out.append(CoFace(labels, fdim))
    return out
