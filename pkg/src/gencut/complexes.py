"""Simplicial complexes on integer-labeled ground sets.

A complex is stored by its ground set and its facets (inclusion-maximal
faces).  Faces are sorted tuples of positive integer labels; the canonical
face order everywhere is graded lexicographic (by cardinality, then
lexicographically), which is also the row/column order of every matrix the
other modules produce.

The complex whose only face is the empty set is representable (facet list
``((),)``); the void complex with no faces at all is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import GroundSetClash, InvalidFacet, NotAGraph

Face = tuple


def canon_face(elements) -> Face:
    """Sorted duplicate-free tuple of labels."""
    return tuple(sorted(set(elements)))


def face_key(face) -> str:
    """Canonical serialization: comma-separated ascending labels, "" for the empty face."""
    return ",".join(str(x) for x in face)


def parse_face_key(key: str) -> Face:
    if key == "":
        return ()
    return canon_face(int(tok) for tok in key.split(","))


def graded_lex(face) -> tuple:
    """Sort key implementing the canonical face order."""
    return (len(face), face)


def subsets_of(labels) -> list:
    """All subsets of ``labels`` (as canonical faces) in graded-lex order."""
    labels = sorted(set(labels))
    out = []
    for r in range(len(labels) + 1):
        out.extend(tuple(c) for c in combinations(labels, r))
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable simplicial complex given by ground set and facets."""

    ground_set: tuple
    facets: tuple

    @property
    def n(self) -> int:
        return len(self.ground_set)

    @cached_property
    def faces(self) -> tuple:
        """Nonempty faces (downward closure of the facets), graded-lex."""
        seen = set()
        for f in self.facets:
            for r in range(1, len(f) + 1):
                seen.update(combinations(f, r))
        return tuple(sorted(seen, key=graded_lex))

    @cached_property
    def _face_set(self):
        return frozenset(self.faces)

    def contains(self, face) -> bool:
        """Face membership (the empty face always belongs)."""
        face = canon_face(face)
        return face == () or face in self._face_set

    def vertices(self) -> tuple:
        """Labels that appear in at least one facet."""
        used = set()
        for f in self.facets:
            used.update(f)
        return tuple(sorted(used))

    def ghost_vertices(self) -> tuple:
        """Ground-set labels belonging to no facet."""
        used = set(self.vertices())
        return tuple(x for x in self.ground_set if x not in used)

    def is_graph(self) -> bool:
        return all(len(f) <= 2 for f in self.facets)

    def facet_intersection(self) -> tuple:
        """Common intersection of all facets (the apex set of a cone)."""
        if not self.facets:
            return ()
        common = set(self.facets[0])
        for f in self.facets[1:]:
            common &= set(f)
        return tuple(sorted(common))

    def relabel(self, mapping) -> "SimplicialComplex":
        """Apply an injective label mapping to ground set and facets."""
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("relabeling must be injective")
        ground = canon_face(mapping.get(x, x) for x in self.ground_set)
        if len(ground) != len(self.ground_set):
            raise ValueError("relabeling collapses ground-set labels")
        facets = [canon_face(mapping.get(x, x) for x in f) for f in self.facets]
        return from_facets(ground, facets)

    def __repr__(self):
        names = "".join("[" + "".join(str(x) for x in f) + "]" for f in self.facets)
        return f"SimplicialComplex({names or '[empty]'} on {list(self.ground_set)})"


def from_facets(ground_set, facet_list) -> SimplicialComplex:
    """Build a complex from generating sets; dominated sets are dropped.

    Raises InvalidFacet when a listed set uses a label outside the ground set.
    An empty generating list yields the complex whose only face is the empty
    set.
    """
    ground = canon_face(ground_set)
    gset = set(ground)
    cand = []
    for f in facet_list:
        cf = canon_face(f)
        if not set(cf) <= gset:
            raise InvalidFacet(f"facet {cf} not contained in ground set {ground}")
        cand.append(cf)
    cand = sorted(set(cand), key=graded_lex)
    maximal = [f for f in cand
               if not any(f != g and set(f) <= set(g) for g in cand)]
    if not maximal:
        maximal = [()]
    return SimplicialComplex(ground, tuple(sorted(maximal, key=graded_lex)))


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on [n]."""
    if n < 1:
        raise ValueError("simplex needs n >= 1")
    return from_facets(range(1, n + 1), [range(1, n + 1)])


def boundary(n: int) -> SimplicialComplex:
    """The boundary of the simplex on [n]: all facets [n] minus one vertex."""
    if n < 1:
        raise ValueError("boundary needs n >= 1")
    full = list(range(1, n + 1))
    return from_facets(full, [[x for x in full if x != i] for i in full])


def turtle(n: int, k: int) -> SimplicialComplex:
    """Turtle complex on [n]: facets [n] minus {i} for i = 1..k."""
    if not 1 <= k <= n:
        raise ValueError("turtle needs 1 <= k <= n")
    full = list(range(1, n + 1))
    return from_facets(full, [[x for x in full if x != i] for i in range(1, k + 1)])


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Union of two complexes on disjoint ground sets."""
    if set(a.ground_set) & set(b.ground_set):
        raise GroundSetClash(
            f"ground sets overlap: {sorted(set(a.ground_set) & set(b.ground_set))}")
    return from_facets(a.ground_set + b.ground_set, list(a.facets) + list(b.facets))


def cone(cx: SimplicialComplex, label: int) -> SimplicialComplex:
    """Cone over ``cx``: every facet gains the fresh apex label."""
    if label in cx.ground_set:
        raise GroundSetClash(f"cone label {label} already in ground set")
    facets = [f + (label,) for f in cx.facets]
    return from_facets(cx.ground_set + (label,), facets)


def k_cone(cx: SimplicialComplex, labels) -> SimplicialComplex:
    """Iterated cone over a list of fresh labels."""
    out = cx
    for l in labels:
        out = cone(out, l)
    return out


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """Alexander dual: faces are the sets whose ground-set complement is a non-face.

    The facets are complements of the inclusion-minimal non-faces.  The dual
    of the full simplex has no faces at all; it collapses to the empty-face
    complex here.
    """
    ground = cx.ground_set
    gset = set(ground)
    minimal_nonfaces = []
    for size in range(1, len(ground) + 1):
        for T in combinations(ground, size):
            if cx.contains(T):
                continue
            if all(cx.contains(T[:i] + T[i + 1:]) for i in range(len(T))):
                minimal_nonfaces.append(T)
    facets = [tuple(sorted(gset - set(T))) for T in minimal_nonfaces]
    return from_facets(ground, facets)


def d_mn(m: int, n: int) -> SimplicialComplex:
    """Alexander dual of two disjoint simplices, built from its explicit description.

    Ground set [m + n], first block 1..m, second block m+1..m+n; the faces
    are exactly the unions of a proper subset of each block.
    """
    if m < 1 or n < 1:
        raise ValueError("d_mn needs m, n >= 1")
    left = list(range(1, m + 1))
    right = list(range(m + 1, m + n + 1))
    facets = []
    for a in left:
        for b in right:
            facets.append([x for x in left if x != a] + [y for y in right if y != b])
    return from_facets(left + right, facets)


def lawrence_lifting(cx: SimplicialComplex, label: int) -> SimplicialComplex:
    """Lawrence lifting: the full ground set as one facet plus apex-extended facets."""
    if label in cx.ground_set:
        raise GroundSetClash(f"lifting label {label} already in ground set")
    facets = [cx.ground_set] + [f + (label,) for f in cx.facets]
    return from_facets(cx.ground_set + (label,), facets)


def suspension(cx: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Suspension of a graph: a new apex joined to every ground-set vertex."""
    if not cx.is_graph():
        raise NotAGraph("suspension requires all facets of cardinality <= 2")
    if apex is None:
        apex = max(cx.ground_set) + 1 if cx.ground_set else 1
    if apex in cx.ground_set:
        raise GroundSetClash(f"apex {apex} already in ground set")
    edges = [f for f in cx.facets if len(f) == 2]
    edges += [(x, apex) for x in cx.ground_set]
    return from_facets(cx.ground_set + (apex,), edges)


def margin_rows(cx: SimplicialComplex) -> list:
    """Row indices (H, F) with H a subset of the facet F, in canonical order."""
    rows = []
    for F in cx.facets:
        for H in subsets_of(F):
            rows.append((H, F))
    return rows


def all_complexes(ground) -> list:
    """Every simplicial complex on the given ground set (facet antichains).

    Enumerates antichains of nonempty subsets, including the empty antichain
    (the empty-face complex).  Exponential; intended for exhaustive testing on
    up to four or five vertices.
    """
    ground = canon_face(ground)
    nonempty = [s for s in subsets_of(ground) if s]
    out = []
    m = len(nonempty)

    def extend(start, chosen):
        out.append(from_facets(ground, chosen))
        for i in range(start, m):
            cand = nonempty[i]
            if any(set(cand) <= set(c) or set(c) <= set(cand) for c in chosen):
                continue
            extend(i + 1, chosen + [cand])

    extend(0, [])
    return out
