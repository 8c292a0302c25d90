"""Closed-form facet descriptions for the solved families, and a dispatcher
that recognizes which family an arbitrary complex belongs to.

Families with complete facet descriptions:

* the simplex (one base inequality switched over every subset),
* disjoint unions (block systems),
* turtle complexes (parity functionals switched over the even subsets),
* cones and iterated cones (doubling construction over the base description),
* the Alexander dual of two disjoint simplices (facets are in bijection with
  the directed cycles of a parity-oriented complete bipartite digraph; long
  cycles are resolved by gluing a 4-cycle off the back recursively).

Everything else falls back to the exact hull oracle when it fits under the
size caps, and to valid-only box bounds when it does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import networkx as nx

from .complexes import (
    SimplicialComplex,
    canon_face,
    d_mn,
    from_facets,
    graded_lex,
    subsets_of,
)
from .errors import TooLarge
from .hull import facets_equal, hull
from .polytopes import HRepresentation, LinearInequality, gcut_vertices
from .switching import switch_family, switch_gcut

DEFAULT_CYCLE_CAP = 200000


def gcut_points(cx: SimplicialComplex) -> list:
    vm = gcut_vertices(cx)
    return [col for _, col in vm.columns()]


def oracle_hrep(cx: SimplicialComplex, max_points=None, max_dim=None) -> HRepresentation:
    """Facets certified by the hull oracle."""
    faces = cx.faces
    if not faces:
        return HRepresentation([], [], "point", True, faces)
    res = hull(gcut_points(cx), max_points=max_points, max_dim=max_dim)
    ineqs = [LinearInequality(dict(zip(faces, a)), b) for a, b in res.facets]
    return HRepresentation(ineqs, [], "oracle", True, faces)


def _simplex_system(vertex_set) -> list:
    """Complete system for the simplex on the given vertices: the all-ones
    bound switched with respect to every subset."""
    verts = canon_face(vertex_set)
    cx = from_facets(verts, [verts])
    base = LinearInequality({F: 1 for F in cx.faces}, 2 ** (len(verts) - 1))
    return switch_family(base, subsets_of(verts), cx)


def hrep_simplex(n: int) -> HRepresentation:
    """Facet description of the gcut polytope of the full simplex: 2^n
    inequalities, one per switching class."""
    if n < 1:
        raise ValueError("need n >= 1")
    cx = from_facets(range(1, n + 1), [range(1, n + 1)])
    return HRepresentation(_simplex_system(cx.ground_set), [], "simplex", True, cx.faces)


def hrep_disjoint_union(cx_a, cx_b, hrep_a, hrep_b) -> HRepresentation:
    """Block system for a disjoint union: each side's system padded by zeros."""
    if not (hrep_a.complete and hrep_b.complete):
        raise ValueError("disjoint union needs complete inputs")
    from .complexes import disjoint_union

    union = disjoint_union(cx_a, cx_b)
    ineqs = list(hrep_a.inequalities) + list(hrep_b.inequalities)
    return HRepresentation(ineqs, [], "disjoint-union", True, union.faces)


def _turtle_system(cx: SimplicialComplex) -> list:
    """Turtle facets: even-parity functionals at 2^(n-2), switched over the
    even subsets.  Works in the complex's own labels."""
    verts = cx.vertices()
    n = len(verts)
    eye = set(cx.facet_intersection())
    ineqs = []
    bases = []
    for S in subsets_of(verts):
        if len(S) % 2 == 1 and not set(S) & eye:
            coeffs = {F: 1 for F in cx.faces if len(set(F) & set(S)) % 2 == 0}
            bases.append(LinearInequality(coeffs, 2 ** (n - 2)))
    evens = [I for I in subsets_of(verts) if len(I) % 2 == 0]
    seen = set()
    for b in bases:
        for iq in switch_family(b, evens, cx):
            key = iq.key()
            if key not in seen:
                seen.add(key)
                ineqs.append(iq)
    return ineqs


def hrep_turtle(n: int, k: int) -> HRepresentation:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    from .complexes import turtle

    cx = turtle(n, k)
    if k == 1:
        # a simplex with a ghost vertex; the simplex system is the description
        return HRepresentation(_simplex_system(cx.vertices()), [], "turtle", True, cx.faces)
    return HRepresentation(_turtle_system(cx), [], "turtle", True, cx.faces)


def hrep_cone(base_cx: SimplicialComplex, base_hrep: HRepresentation,
              label: int) -> HRepresentation:
    """Doubling construction: a.x <= c lifts to
    a.x + a.x' + x_l <= 2c  and  a.x - a.x' - x_l <= 0,
    where x' runs over the base faces with the apex adjoined (the second row
    is the switching of the first by {label})."""
    if not base_hrep.complete:
        raise ValueError("cone construction needs a complete base description")
    from .complexes import cone

    cxc = cone(base_cx, label)
    ineqs = []
    for iq in base_hrep.inequalities:
        plus = {}
        minus = {}
        for F, c in iq.coeffs.items():
            lifted = tuple(sorted(F + (label,)))
            plus[F] = c
            plus[lifted] = c
            minus[F] = c
            minus[lifted] = -c
        plus[(label,)] = Fraction(1)
        minus[(label,)] = Fraction(-1)
        ineqs.append(LinearInequality(plus, 2 * iq.rhs))
        ineqs.append(LinearInequality(minus, Fraction(0)))
    return HRepresentation(ineqs, [], "cone", True, cxc.faces)


def hrep_k_cone(base_cx: SimplicialComplex, base_hrep: HRepresentation,
                labels) -> HRepresentation:
    from .complexes import cone

    cx, rep = base_cx, base_hrep
    for l in labels:
        rep = hrep_cone(cx, rep, l)
        cx = cone(cx, l)
    return rep


# ---------------------------------------------------------------------------
# Alexander dual of two disjoint simplices
# ---------------------------------------------------------------------------

@dataclass
class BipartiteDigraph:
    """Complete bipartite digraph on the subsets of the two label blocks.

    The edge between A (left block) and B (right block) is labeled by the
    subset A | B and directed A -> B when #(A | B) is even, B -> A when odd.
    """

    left_labels: tuple
    right_labels: tuple
    left: tuple
    right: tuple
    edges: list  # (A, B, forward)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        for A in self.left:
            g.add_node(("L", A))
        for B in self.right:
            g.add_node(("R", B))
        for A, B, forward in self.edges:
            if forward:
                g.add_edge(("L", A), ("R", B))
            else:
                g.add_edge(("R", B), ("L", A))
        return g


@dataclass
class Cycle:
    """A directed cycle, canonically rotated so its lexicographically least
    edge label comes first (the traversal direction is fixed by the
    orientation)."""

    nodes: tuple  # (side, subset) in traversal order; node i is the tail of edge i
    edges: tuple  # subset labels in traversal order

    def __len__(self):
        return len(self.edges)


def build_g2(m: int, n: int) -> BipartiteDigraph:
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    left_labels = tuple(range(1, m + 1))
    right_labels = tuple(range(m + 1, m + n + 1))
    left = tuple(subsets_of(left_labels))
    right = tuple(subsets_of(right_labels))
    edges = [(A, B, (len(A) + len(B)) % 2 == 0) for A in left for B in right]
    return BipartiteDigraph(left_labels, right_labels, left, right, edges)


def _canonical_cycle(node_list) -> Cycle:
    k = len(node_list)
    edges = []
    for i in range(k):
        side_a, a = node_list[i]
        _, b = node_list[(i + 1) % k]
        edges.append(tuple(sorted(a + b)))
    best = min(range(k), key=lambda r: tuple(graded_lex(edges[(r + j) % k])
                                             for j in range(k)))
    nodes = tuple(node_list[(best + j) % k] for j in range(k))
    edges = tuple(edges[(best + j) % k] for j in range(k))
    return Cycle(nodes, edges)


def enumerate_cycles(g: BipartiteDigraph, max_len: int | None = None,
                     cap: int = DEFAULT_CYCLE_CAP) -> list:
    """All directed cycles, canonicalized and sorted by (length, edge labels)."""
    out = []
    for node_list in nx.simple_cycles(g.to_networkx(), length_bound=max_len):
        out.append(_canonical_cycle(node_list))
        if len(out) > cap:
            raise TooLarge(f"more than {cap} directed cycles")
    out.sort(key=lambda c: (len(c), tuple(graded_lex(e) for e in c.edges)))
    return out


def _ev_base(odd_left, odd_right, cx: SimplicialComplex, m: int, n: int) -> LinearInequality:
    """Facet for the 4-cycle through the empty edge: coefficient 1 on every
    face meeting both odd sets evenly."""
    o, u = set(odd_left), set(odd_right)
    coeffs = {F: 1 for F in cx.faces
              if len(set(F) & o) % 2 == 0 and len(set(F) & u) % 2 == 0}
    return LinearInequality(coeffs, Fraction(2) ** (m + n - 3))


def _gluing_functional(a1, b1, a2, b2, cx: SimplicialComplex) -> dict:
    """The correction functional of the gluing step: +1 on faces whose parity
    pattern against (A1, B1, A2, B2) is (odd, even, even, odd) or
    (even, odd, odd, even), -1 on (odd, odd, even, even) or
    (even, even, odd, odd), 0 elsewhere."""
    sets = [set(a1), set(b1), set(a2), set(b2)]
    out = {}
    for F in cx.faces:
        p = tuple(len(set(F) & s) % 2 for s in sets)
        if p in ((1, 0, 0, 1), (0, 1, 1, 0)):
            out[F] = Fraction(1)
        elif p in ((1, 1, 0, 0), (0, 0, 1, 1)):
            out[F] = Fraction(-1)
    return out


def _left_start(cycle: Cycle) -> tuple:
    """Left and right node subsets in traversal order, starting at a left node."""
    nodes = list(cycle.nodes)
    if nodes[0][0] == "R":
        nodes = nodes[1:] + nodes[:1]
    lefts = tuple(s for side, s in nodes[0::2])
    rights = tuple(s for side, s in nodes[1::2])
    return lefts, rights


def _cycle_inequality(lefts, rights, cx, m, n) -> LinearInequality:
    """Facet-defining inequality of the co-facet given by a directed cycle.

    4-cycles through the empty edge get the even-parity base; other 4-cycles
    are its switchings; longer cycles peel a 4-cycle next to the empty edge
    (or at the lexicographically least admissible all-odd position) and glue.
    """
    k = len(lefts)
    if k == 2:
        if () in lefts and () in rights:
            o = lefts[0] if lefts[1] == () else lefts[1]
            u = rights[0] if rights[1] == () else rights[1]
            return _ev_base(o, u, cx, m, n)
        edges = [tuple(sorted(lefts[i] + rights[j])) for i in range(2) for j in range(2)]
        I = min(edges, key=graded_lex)
        o = tuple(sorted(set(lefts[0]) ^ set(lefts[1])))
        u = tuple(sorted(set(rights[0]) ^ set(rights[1])))
        switched = switch_gcut(_ev_base(o, u, cx, m, n), I, cx)
        if switched.rhs != 0:
            raise RuntimeError("switched 4-cycle facet is not homogeneous (internal error)")
        return switched

    empty_pos = next((p for p in range(k) if lefts[p] == () and rights[p] == ()), None)
    if empty_pos is not None:
        i = (empty_pos - 1) % k
    else:
        candidates = [p for p in range(k) if len(lefts[p]) % 2 == 1]
        if not candidates:
            raise RuntimeError("no admissible peel position (internal error)")
        i = min(candidates, key=lambda p: graded_lex(lefts[(p + 2) % k]))

    a_i, b_i = lefts[i], rights[i]
    a_i1, b_i1 = lefts[(i + 1) % k], rights[(i + 1) % k]
    a_i2, b_i2 = lefts[(i + 2) % k], rights[(i + 2) % k]

    c1_lefts, c1_rights = (a_i2, a_i1), (b_i, b_i1)
    c2_lefts = (a_i,) + tuple(lefts[(i + j) % k] for j in range(3, k))
    c2_rights = (b_i2,) + tuple(rights[(i + j) % k] for j in range(3, k))

    q1 = _cycle_inequality(c1_lefts, c1_rights, cx, m, n)
    q2 = _cycle_inequality(c2_lefts, c2_rights, cx, m, n)
    if q2.rhs != 0:
        raise RuntimeError("glued remainder is not homogeneous (internal error)")
    glue = _gluing_functional(a_i2, b_i, a_i, b_i2, cx)
    coeffs = dict(q1.coeffs)
    for F, c in q2.coeffs.items():
        coeffs[F] = coeffs.get(F, Fraction(0)) + c
    for F, c in glue.items():
        coeffs[F] = coeffs.get(F, Fraction(0)) + c
    return LinearInequality(coeffs, q1.rhs)


def hrep_adual(m: int, n: int, cycle_cap: int = DEFAULT_CYCLE_CAP) -> HRepresentation:
    """Complete facet description of GCut(D_{m,n}): one facet per directed cycle."""
    cx = d_mn(m, n)
    if not cx.faces:
        return HRepresentation([], [], "alexander-dual", True, cx.faces)
    cycles = enumerate_cycles(build_g2(m, n), cap=cycle_cap)
    ineqs = []
    seen = set()
    for cyc in cycles:
        lefts, rights = _left_start(cyc)
        iq = _cycle_inequality(lefts, rights, cx, m, n)
        key = iq.key()
        if key not in seen:
            seen.add(key)
            ineqs.append(iq)
    return HRepresentation(ineqs, [], "alexander-dual", True, cx.faces)


# ---------------------------------------------------------------------------
# family recognition
# ---------------------------------------------------------------------------

def _facet_components(cx: SimplicialComplex) -> list:
    """Partition the facets into connected components under shared vertices."""
    facets = list(cx.facets)
    parent = list(range(len(facets)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            if set(facets[i]) & set(facets[j]):
                parent[find(i)] = find(j)
    groups = {}
    for i, f in enumerate(facets):
        groups.setdefault(find(i), []).append(f)
    return list(groups.values())


def _match_adual(cx: SimplicialComplex):
    """Recognize a relabeled D_{m,n}: all facets miss exactly two vertices and
    the missing pairs form a complete bipartite graph."""
    verts = cx.vertices()
    nv = len(verts)
    if nv < 4 or any(len(F) != nv - 2 for F in cx.facets):
        return None
    pairs = [tuple(sorted(set(verts) - set(F))) for F in cx.facets]
    if len(set(pairs)) != len(pairs):
        return None
    g = nx.Graph(pairs)
    if set(g.nodes) != set(verts) or not nx.is_connected(g) or not nx.is_bipartite(g):
        return None
    part1, part2 = nx.bipartite.sets(g)
    if len(pairs) != len(part1) * len(part2):
        return None
    v1 = sorted(part1) if min(verts) in part1 else sorted(part2)
    v2 = sorted(set(verts) - set(v1))
    m, n = len(v1), len(v2)
    mapping = {v: i + 1 for i, v in enumerate(v1)}
    mapping.update({v: m + i + 1 for i, v in enumerate(v2)})
    if cx.relabel(mapping).facets != d_mn(m, n).facets:
        return None
    return m, n, mapping


def _relabel_hrep(rep: HRepresentation, inverse: dict, ambient) -> HRepresentation:
    def back(face):
        return tuple(sorted(inverse[x] for x in face))

    ineqs = [LinearInequality({back(F): c for F, c in iq.coeffs.items()}, iq.rhs)
             for iq in rep.inequalities]
    return HRepresentation(ineqs, [], rep.family_tag, rep.complete, ambient)


def hrep(cx: SimplicialComplex, method: str = "auto",
         max_points=None, max_dim=None) -> HRepresentation:
    """Facet description of GCut(cx), by family recognition.

    Dispatch order: point, simplex, disjoint union (facet components),
    turtle, Alexander dual of two simplices, cone over a recognizable base,
    hull oracle.  All closed forms yield complete descriptions; the oracle
    fallback is complete when it fits under the caps, otherwise valid-only
    box bounds are returned with ``complete=False``.
    """
    if method not in ("auto", "oracle"):
        raise ValueError("method must be auto or oracle")
    faces = cx.faces
    if not faces:
        return HRepresentation([], [], "point", True, faces)
    if method == "oracle":
        return oracle_hrep(cx, max_points=max_points, max_dim=max_dim)

    if len(cx.facets) == 1:
        return HRepresentation(_simplex_system(cx.facets[0]), [], "simplex", True, faces)

    comps = _facet_components(cx)
    if len(comps) > 1:
        ineqs = []
        complete = True
        tags = []
        for facets in comps:
            verts = sorted({x for f in facets for x in f})
            sub = from_facets(verts, facets)
            rep = hrep(sub, max_points=max_points, max_dim=max_dim)
            ineqs.extend(rep.inequalities)
            complete = complete and rep.complete
            tags.append(rep.family_tag)
        tag = "disjoint-union(" + ",".join(tags) + ")"
        return HRepresentation(ineqs, [], tag, complete, faces)

    verts = cx.vertices()
    if len(cx.facets) >= 2 and all(len(F) == len(verts) - 1 for F in cx.facets):
        return HRepresentation(_turtle_system(cx), [], "turtle", True, faces)

    matched = _match_adual(cx)
    if matched is not None:
        m, n, mapping = matched
        inverse = {v: k for k, v in mapping.items()}
        return _relabel_hrep(hrep_adual(m, n), inverse, faces)

    eye = cx.facet_intersection()
    if eye:
        base_facets = [tuple(x for x in F if x not in eye) for F in cx.facets]
        base_verts = sorted(set(verts) - set(eye))
        base = from_facets(base_verts, base_facets)
        base_rep = hrep(base, max_points=max_points, max_dim=max_dim)
        if base_rep.complete:
            rep = hrep_k_cone(base, base_rep, sorted(eye))
            return HRepresentation(rep.inequalities, [],
                                   f"cone({base_rep.family_tag})", True, faces)

    try:
        return oracle_hrep(cx, max_points=max_points, max_dim=max_dim)
    except TooLarge:
        box = []
        for F in faces:
            box.append(LinearInequality({F: 1}, 1))
            box.append(LinearInequality({F: -1}, 0))
        return HRepresentation(box, [], "box", False, faces)


def verify_hrep(cx: SimplicialComplex, max_points=None, max_dim=None):
    """Closed form versus oracle.  Returns (equal, missing, extra, family_tag)."""
    rep = hrep(cx, max_points=max_points, max_dim=max_dim)
    oracle = oracle_hrep(cx, max_points=max_points, max_dim=max_dim)
    faces = cx.faces

    def raw(ineqs):
        return [(tuple(iq.coeffs.get(F, Fraction(0)) for F in faces), iq.rhs)
                for iq in ineqs]

    equal, missing, extra = facets_equal(raw(rep.inequalities), raw(oracle.inequalities))
    return equal, missing, extra, rep.family_tag
