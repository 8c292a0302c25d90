"""The four exact linear maps between the marginal, correlation, and
generalized cut polytopes, materialized as labeled rational matrices.

corr -> gcut : phi        (lower triangular, diagonal (-2)^(#F - 1))
gcut -> corr : psi        (the inverse of phi)
marg -> corr : omega
corr -> marg : pi_map plus the translation u_empty (an affine map)
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import SimplicialComplex, margin_rows
from .polytopes import LabeledMatrix


def phi(cx: SimplicialComplex) -> LabeledMatrix:
    """Generalized covariance map: entry (F, H) = (-2)^(#H-1) for H inside F."""
    faces = cx.faces
    entries = []
    for F in faces:
        fs = set(F)
        row = []
        for H in faces:
            row.append(Fraction(-2) ** (len(H) - 1) if set(H) <= fs else Fraction(0))
        entries.append(row)
    return LabeledMatrix(faces, faces, entries)


def psi(cx: SimplicialComplex) -> LabeledMatrix:
    """Inverse covariance map: entry (H, G) = (-1)^(#G-1) / 2^(#H-1) for G inside H."""
    faces = cx.faces
    entries = []
    for H in faces:
        hs = set(H)
        row = []
        for G in faces:
            if set(G) <= hs:
                row.append(Fraction((-1) ** (len(G) - 1), 2 ** (len(H) - 1)))
            else:
                row.append(Fraction(0))
        entries.append(row)
    return LabeledMatrix(faces, faces, entries)


def facet_count_containing(cx: SimplicialComplex, face) -> int:
    fs = set(face)
    return sum(1 for F in cx.facets if fs <= set(F))


def omega(cx: SimplicialComplex) -> LabeledMatrix:
    """Marg-to-corr map: entry (T, (H, F)) = 1/f(T) when T is inside H,
    with f(T) the number of facets containing T."""
    faces = cx.faces
    rows = margin_rows(cx)
    entries = []
    for T in faces:
        ts = set(T)
        f_t = facet_count_containing(cx, T)
        row = []
        for H, F in rows:
            row.append(Fraction(1, f_t) if ts <= set(H) else Fraction(0))
        entries.append(row)
    return LabeledMatrix(faces, tuple(rows), entries)


def pi_map(cx: SimplicialComplex) -> LabeledMatrix:
    """Linear part of the corr-to-marg affine map:
    entry ((H, F), T) = (-1)^(#H + #T) when H <= T <= F."""
    faces = cx.faces
    rows = margin_rows(cx)
    entries = []
    for H, F in rows:
        hs, fs = set(H), set(F)
        row = []
        for T in faces:
            ts = set(T)
            if hs <= ts <= fs:
                row.append(Fraction((-1) ** (len(H) + len(T))))
            else:
                row.append(Fraction(0))
        entries.append(row)
    return LabeledMatrix(tuple(rows), faces, entries)


def u_empty(cx: SimplicialComplex) -> dict:
    """The marg vertex of the empty subset: 1 exactly on the (empty, F) rows."""
    return {(H, F): Fraction(1 if H == () else 0) for H, F in margin_rows(cx)}
