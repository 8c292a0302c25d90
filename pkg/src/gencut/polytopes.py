"""Vertex matrices of the four polytope families and the inequality type.

Columns of every vertex matrix are indexed by subsets of the ground set in
graded-lex order (2^n columns, no deduplication: subsets differing in ghost
vertices repeat columns, and the hull oracle dedupes).  All entries are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .complexes import SimplicialComplex, canon_face, graded_lex, margin_rows, subsets_of
from .errors import AmbientMismatch, NotAGraph


def label_sort_key(label):
    """Canonical order for coefficient labels: faces graded-lex, margin rows
    by (facet, subset) graded-lex."""
    if label and isinstance(label[0], tuple):
        H, F = label
        return (1, graded_lex(F), graded_lex(H))
    return (0, graded_lex(label))


@dataclass
class LabeledMatrix:
    """Dense exact matrix with row and column labels."""

    row_labels: tuple
    col_labels: tuple
    entries: list

    def __post_init__(self):
        self.row_labels = tuple(self.row_labels)
        self.col_labels = tuple(self.col_labels)

    def column(self, label) -> list:
        j = self.col_labels.index(label)
        return [row[j] for row in self.entries]

    def column_dict(self, label) -> dict:
        col = self.column(label)
        return dict(zip(self.row_labels, col))

    def columns(self):
        for j, lab in enumerate(self.col_labels):
            yield lab, [row[j] for row in self.entries]

    def mul(self, other: "LabeledMatrix") -> "LabeledMatrix":
        if self.col_labels != other.row_labels:
            raise AmbientMismatch("inner labels do not match in matrix product")
        if not self.col_labels:
            zeros = [[Fraction(0)] * len(other.col_labels) for _ in self.row_labels]
            return LabeledMatrix(self.row_labels, other.col_labels, zeros)
        return LabeledMatrix(self.row_labels, other.col_labels,
                             linalg.mat_mul(self.entries, other.entries))

    def __eq__(self, other):
        return (isinstance(other, LabeledMatrix)
                and self.row_labels == other.row_labels
                and self.col_labels == other.col_labels
                and [[Fraction(x) for x in r] for r in self.entries]
                == [[Fraction(x) for x in r] for r in other.entries])


def marg_vertices(cx: SimplicialComplex) -> LabeledMatrix:
    """Design matrix: rows (H, F), columns S; entry 1 iff S cap F = H."""
    rows = margin_rows(cx)
    cols = subsets_of(cx.ground_set)
    entries = []
    for H, F in rows:
        fs, hs = set(F), set(H)
        entries.append([1 if set(S) & fs == hs else 0 for S in cols])
    return LabeledMatrix(tuple(rows), tuple(cols), entries)


def corr_vertices(cx: SimplicialComplex) -> LabeledMatrix:
    """Correlation polytope vertices: entry 1 iff the face is contained in S."""
    faces = cx.faces
    cols = subsets_of(cx.ground_set)
    entries = []
    for F in faces:
        fs = set(F)
        entries.append([1 if fs <= set(S) else 0 for S in cols])
    return LabeledMatrix(faces, tuple(cols), entries)


def gcut_vertices(cx: SimplicialComplex) -> LabeledMatrix:
    """Generalized cut polytope vertices: entry is the parity of #(F cap S)."""
    faces = cx.faces
    cols = subsets_of(cx.ground_set)
    entries = []
    for F in faces:
        fs = set(F)
        entries.append([len(fs & set(S)) % 2 for S in cols])
    return LabeledMatrix(faces, tuple(cols), entries)


def cut_vertices(cx: SimplicialComplex) -> LabeledMatrix:
    """Cut polytope of a graph: rows are edges, columns are cuts S | complement.

    Cuts are indexed by the subsets S of the ground set minus its largest
    label (the complement representative containing that label is dropped),
    so there are 2^(n-1) columns.
    """
    if not cx.is_graph():
        raise NotAGraph("cut polytope requires a graph")
    edges = tuple(f for f in cx.facets if len(f) == 2)
    rest = [x for x in cx.ground_set if x != max(cx.ground_set)] if cx.ground_set else []
    cols = subsets_of(rest)
    entries = []
    for e in edges:
        es = set(e)
        entries.append([1 if len(es & set(S)) == 1 else 0 for S in cols])
    return LabeledMatrix(edges, tuple(cols), entries)


@dataclass
class LinearInequality:
    """A functional-over-labels with right-hand side, read as coeffs . x <= rhs."""

    coeffs: dict
    rhs: Fraction

    def __post_init__(self):
        self.coeffs = {k: Fraction(v) for k, v in self.coeffs.items() if Fraction(v) != 0}
        self.rhs = Fraction(self.rhs)

    def is_vacuous(self) -> bool:
        return not self.coeffs and self.rhs >= 0

    def evaluate(self, point: dict) -> Fraction:
        missing = [k for k in self.coeffs if k not in point]
        if missing:
            raise AmbientMismatch(f"point lacks coordinates {missing[:3]}")
        return sum((c * Fraction(point[k]) for k, c in self.coeffs.items()), Fraction(0))

    def normalized(self) -> "LinearInequality":
        """Scale by a positive rational so (coeffs, rhs) is a primitive integer vector."""
        labels = sorted(self.coeffs, key=label_sort_key)
        vec = [self.coeffs[l] for l in labels] + [self.rhs]
        ints = linalg.primitive(vec)
        return LinearInequality(dict(zip(labels, ints[:-1])), ints[-1])

    def key(self):
        """Hashable canonical form (of the normalized inequality)."""
        norm = self.normalized()
        return (tuple(sorted(norm.coeffs.items(), key=lambda kv: label_sort_key(kv[0]))),
                norm.rhs)

    def __eq__(self, other):
        return isinstance(other, LinearInequality) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass
class HRepresentation:
    """A set of valid inequalities for a polytope, with provenance tag.

    ``equalities`` carries the affine hull (empty for full-dimensional
    polytopes); ``complete`` records whether the inequalities are claimed to
    be the full facet list.
    """

    inequalities: list
    equalities: list = field(default_factory=list)
    family_tag: str = ""
    complete: bool = False
    ambient: tuple = ()

    def inequality_keys(self):
        return {iq.key() for iq in self.inequalities}


def evaluate(ineq: LinearInequality, point: dict) -> Fraction:
    return ineq.evaluate(point)


def is_valid(ineq: LinearInequality, vm: LabeledMatrix):
    """Check coeffs . column <= rhs for every column.

    Returns (True, None) or (False, first_violating_column_label).
    """
    if not set(ineq.coeffs) <= set(vm.row_labels):
        raise AmbientMismatch("inequality mentions labels outside the matrix rows")
    idx = {lab: i for i, lab in enumerate(vm.row_labels)}
    pairs = [(idx[l], c) for l, c in ineq.coeffs.items()]
    for j, lab in enumerate(vm.col_labels):
        total = sum(c * vm.entries[i][j] for i, c in pairs)
        if total > ineq.rhs:
            return False, lab
    return True, None


def tight_columns(ineq: LinearInequality, vm: LabeledMatrix) -> list:
    """Column labels where the inequality holds with equality."""
    idx = {lab: i for i, lab in enumerate(vm.row_labels)}
    pairs = [(idx[l], c) for l, c in ineq.coeffs.items()]
    out = []
    for j, lab in enumerate(vm.col_labels):
        if sum(c * vm.entries[i][j] for i, c in pairs) == ineq.rhs:
            out.append(lab)
    return out


def membership(point: dict, hrep: HRepresentation, mode: str = "closure") -> bool:
    """Membership test against an H-representation.

    closure: every equality exact and every inequality satisfied.
    relint:  equalities exact, inequalities strict.
    """
    if mode not in ("closure", "relint"):
        raise ValueError("mode must be closure or relint")
    for eq in hrep.equalities:
        if eq.evaluate(point) != eq.rhs:
            return False
    for iq in hrep.inequalities:
        val = iq.evaluate(point)
        if mode == "closure":
            if val > iq.rhs:
                return False
        else:
            if val >= iq.rhs:
                return False
    return True


def centroid(vm: LabeledMatrix) -> dict:
    """Average of the columns (a relative-interior point of the hull)."""
    ncols = len(vm.col_labels)
    return {lab: Fraction(sum(row), ncols)
            for lab, row in zip(vm.row_labels, vm.entries)}
