"""The switching operation on generalized cut inequalities, and its transported
versions on the correlation and marginal polytopes.

Switching a gcut inequality by I flips the sign of every coefficient whose
face meets I oddly and subtracts the value at the cut vertex of I from the
right-hand side; it permutes the facets.  On the other two polytopes the same
operation is conjugated through the exact maps of :mod:`gencut.transform`.
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import SimplicialComplex, canon_face, margin_rows
from .errors import AmbientMismatch, NotInRowSpace
from .polytopes import LinearInequality
from .transform import omega, phi, pi_map, psi


def _check_gcut_ambient(ineq: LinearInequality, cx: SimplicialComplex):
    faces = set(cx.faces)
    bad = [f for f in ineq.coeffs if f not in faces]
    if bad:
        raise AmbientMismatch(f"coefficients on non-faces: {bad[:3]}")


def gcut_vertex(cx: SimplicialComplex, subset) -> dict:
    """The cut vertex d^S as a face-keyed dict."""
    s = set(subset)
    return {F: Fraction(len(set(F) & s) % 2) for F in cx.faces}


def switch_gcut(ineq: LinearInequality, I, cx: SimplicialComplex) -> LinearInequality:
    """Switch a valid gcut inequality with respect to the subset I."""
    _check_gcut_ambient(ineq, cx)
    I = canon_face(I)
    iset = set(I)
    coeffs = {F: (-1) ** (len(set(F) & iset) % 2) * c for F, c in ineq.coeffs.items()}
    d_i = gcut_vertex(cx, I)
    value = sum((c * d_i[F] for F, c in ineq.coeffs.items()), Fraction(0))
    return LinearInequality(coeffs, ineq.rhs - value)


def switch_family(ineq: LinearInequality, sets, cx: SimplicialComplex) -> list:
    """Switch by every subset in ``sets``; duplicates are removed after
    normalization, keeping first occurrences in order."""
    seen = set()
    out = []
    for I in sets:
        s = switch_gcut(ineq, I, cx)
        key = s.key()
        if key not in seen:
            seen.add(key)
            out.append(s)
    return out


def _row_times(vec: dict, matrix):
    """Row vector (keyed by matrix row labels) times a labeled matrix."""
    out = {}
    idx = {lab: i for i, lab in enumerate(matrix.row_labels)}
    for j, col_label in enumerate(matrix.col_labels):
        total = Fraction(0)
        for lab, c in vec.items():
            if c:
                total += c * matrix.entries[idx[lab]][j]
        if total:
            out[col_label] = total
    return out


def gcut_to_corr(ineq: LinearInequality, cx: SimplicialComplex) -> LinearInequality:
    """Transport p.x <= p0 on GCut to (p Phi).y <= p0 on Corr (x = Phi y)."""
    return LinearInequality(_row_times(ineq.coeffs, phi(cx)), ineq.rhs)


def corr_to_gcut(ineq: LinearInequality, cx: SimplicialComplex) -> LinearInequality:
    """Transport q.y <= q0 on Corr to (q Psi).x <= q0 on GCut (y = Psi x)."""
    return LinearInequality(_row_times(ineq.coeffs, psi(cx)), ineq.rhs)


def corr_to_marg(ineq: LinearInequality, cx: SimplicialComplex) -> LinearInequality:
    """Transport q.y <= q0 on Corr to (q Omega).z <= q0 on Marg."""
    return LinearInequality(_row_times(ineq.coeffs, omega(cx)), ineq.rhs)


def switch_corr(q: LinearInequality, I, cx: SimplicialComplex) -> LinearInequality:
    """Switching transported to the correlation polytope:
    q^[I] = (q Psi)^(I) Phi with rhs q0 - (q Psi) . d^I."""
    p = corr_to_gcut(q, cx)
    return gcut_to_corr(switch_gcut(p, I, cx), cx)


def marg_to_gcut(r: LinearInequality, cx: SimplicialComplex) -> LinearInequality:
    """The gcut functional r Pi Psi (rhs unchanged; valid when r is in the
    row space of omega, whence r . u_empty = 0)."""
    rpi = _row_times(r.coeffs, pi_map(cx))
    return LinearInequality(_row_times(rpi, psi(cx)), r.rhs)


def project_to_rowspace(r: dict, cx: SimplicialComplex) -> dict:
    """Projection of a marg functional into the row space of omega.

    Computed as r Pi Omega.  This is the projection along the functionals
    that are constant on the marginal polytope, so the image defines the same
    supporting hyperplane (with right-hand side shifted by the value at the
    empty-set vertex); it is the identity on the row space itself.
    """
    rpi = _row_times(r, pi_map(cx))
    return _row_times(rpi, omega(cx))


def in_rowspace(r: dict, cx: SimplicialComplex) -> bool:
    """Membership in the row space of omega (idempotence of the projection)."""
    proj = project_to_rowspace(r, cx)
    keys = set(r) | set(proj)
    return all(Fraction(r.get(k, 0)) == proj.get(k, Fraction(0)) for k in keys)


def switch_marg(r: LinearInequality, I, cx: SimplicialComplex) -> LinearInequality:
    """Switching transported to the marginal polytope:
    r^<I> = (r Pi Psi)^(I) Phi Omega with rhs r0 - (r Pi Psi) . d^I.

    Requires r in the row space of omega; callers with a general facet
    functional must project first (see project_to_rowspace).
    """
    rows = set(margin_rows(cx))
    bad = [k for k in r.coeffs if k not in rows]
    if bad:
        raise AmbientMismatch(f"coefficients on unknown margin rows: {bad[:3]}")
    if not in_rowspace(r.coeffs, cx):
        raise NotInRowSpace("functional is not in the row space of omega; project first")
    p = marg_to_gcut(r, cx)
    switched = switch_gcut(p, I, cx)
    coeffs = _row_times(_row_times(switched.coeffs, phi(cx)), omega(cx))
    return LinearInequality(coeffs, switched.rhs)
