"""JSON/CSV encodings shared by the library and the command line.

Rationals are strings "p/q" (or "n" when integral).  Faces serialize as
comma-separated ascending labels with "" for the empty face; margin-row pairs
(H, F) as "H|F" with the same face encoding on both sides.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction

from .complexes import SimplicialComplex, face_key, from_facets, parse_face_key
from .polytopes import HRepresentation, LabeledMatrix, LinearInequality


def frac_str(x) -> str:
    return str(Fraction(x))


def parse_frac(s) -> Fraction:
    return Fraction(str(s))


def label_key(label) -> str:
    if label and isinstance(label[0], tuple):
        H, F = label
        return f"{face_key(H)}|{face_key(F)}"
    return face_key(label)


def parse_label(key: str):
    if "|" in key:
        h, f = key.split("|", 1)
        return (parse_face_key(h), parse_face_key(f))
    return parse_face_key(key)


def complex_to_dict(cx: SimplicialComplex) -> dict:
    return {"ground_set": list(cx.ground_set),
            "facets": [list(f) for f in cx.facets]}


def complex_from_dict(d: dict) -> SimplicialComplex:
    return from_facets(d["ground_set"], d["facets"])


def ineq_to_dict(iq: LinearInequality) -> dict:
    from .polytopes import label_sort_key

    coeffs = {label_key(k): frac_str(v)
              for k, v in sorted(iq.coeffs.items(), key=lambda kv: label_sort_key(kv[0]))}
    return {"coeffs": coeffs, "rhs": frac_str(iq.rhs)}


def ineq_from_dict(d: dict) -> LinearInequality:
    return LinearInequality({parse_label(k): parse_frac(v) for k, v in d["coeffs"].items()},
                            parse_frac(d["rhs"]))


def hrep_to_dict(rep: HRepresentation, cx: SimplicialComplex | None = None) -> dict:
    out = {}
    if cx is not None:
        out["complex"] = complex_to_dict(cx)
    out["family"] = rep.family_tag
    out["complete"] = rep.complete
    out["equalities"] = [ineq_to_dict(e) for e in rep.equalities]
    out["inequalities"] = [ineq_to_dict(i) for i in rep.inequalities]
    return out


def hrep_from_dict(d: dict) -> HRepresentation:
    return HRepresentation(
        [ineq_from_dict(i) for i in d.get("inequalities", [])],
        [ineq_from_dict(e) for e in d.get("equalities", [])],
        d.get("family", ""),
        d.get("complete", False),
    )


def matrix_to_dict(m: LabeledMatrix) -> dict:
    entries = []
    for i, row in enumerate(m.entries):
        for j, v in enumerate(row):
            if v:
                entries.append([i, j, frac_str(v)])
    return {"rows": [label_key(l) for l in m.row_labels],
            "cols": [label_key(l) for l in m.col_labels],
            "entries": entries}


def vertex_csv(vm: LabeledMatrix) -> str:
    """One row per subset; the header row carries the coordinate keys."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["subset"] + [label_key(l) for l in vm.row_labels])
    for j, S in enumerate(vm.col_labels):
        w.writerow([face_key(S)] + [str(vm.entries[i][j]) for i in range(len(vm.row_labels))])
    return buf.getvalue()


def parse_points_csv(text: str):
    """Returns (coordinate labels, list of point rows) from vertex_csv format."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise ValueError("empty CSV")
    header = rows[0]
    labels = [parse_label(k) for k in header[1:]]
    points = [[parse_frac(x) for x in row[1:]] for row in rows[1:] if row]
    return labels, points
