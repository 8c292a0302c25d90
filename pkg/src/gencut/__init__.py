"""Exact toolkit for marginal, correlation, and generalized cut polytopes of
simplicial complexes: vertex matrices, the four transport maps, switching,
closed-form facet descriptions, Gale duality, an exact hull oracle, and
toric degrees."""

from .complexes import (
    SimplicialComplex,
    alexander_dual,
    boundary,
    cone,
    d_mn,
    disjoint_union,
    from_facets,
    k_cone,
    lawrence_lifting,
    simplex,
    suspension,
    turtle,
)
from .degree import (
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
from .gale import GaleTransform, cofacets, gale, is_face, turtle_gale
from .hrep import (
    build_g2,
    enumerate_cycles,
    hrep,
    hrep_adual,
    hrep_cone,
    hrep_disjoint_union,
    hrep_k_cone,
    hrep_simplex,
    hrep_turtle,
    oracle_hrep,
    verify_hrep,
)
from .hull import HullResult, facets_equal, hull, normalized_volume, slow_facets
from .polytopes import (
    HRepresentation,
    LabeledMatrix,
    LinearInequality,
    corr_vertices,
    cut_vertices,
    evaluate,
    gcut_vertices,
    is_valid,
    marg_vertices,
    membership,
)
from .switching import (
    project_to_rowspace,
    switch_corr,
    switch_family,
    switch_gcut,
    switch_marg,
)
from .transform import omega, phi, pi_map, psi, u_empty

__version__ = "0.1.0"
