"""Command-line front end.

Every subcommand reads JSON/CSV files, writes JSON (or CSV where noted) to
stdout or --out, and is byte-deterministic for fixed inputs.  Exit codes:
0 success, 2 validation error, 3 size cap exceeded.  The environment
variables GCUT_MAX_VERTICES and GCUT_MAX_DIM override the hull oracle caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import degree as degree_mod
from . import serialize as ser
from .complexes import canon_face, face_key
from .errors import GencutError, TooLarge
from .gale import cofacets, gale
from .hrep import gcut_points, hrep, oracle_hrep, verify_hrep
from .hull import hull, normalized_volume
from .polytopes import (
    LinearInequality,
    corr_vertices,
    cut_vertices,
    gcut_vertices,
    marg_vertices,
    membership,
)
from .switching import switch_corr, switch_gcut, switch_marg
from .transform import omega, phi, pi_map, psi, u_empty

VERTEX_BUILDERS = {
    "marg": marg_vertices,
    "corr": corr_vertices,
    "gcut": gcut_vertices,
    "cut": cut_vertices,
}


def _caps():
    mv = os.environ.get("GCUT_MAX_VERTICES")
    md = os.environ.get("GCUT_MAX_DIM")
    return (int(mv) if mv else None, int(md) if md else None)


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _read_complex(path):
    return ser.complex_from_dict(_read_json(path))


def _write(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out):
    _write(json.dumps(obj, indent=2) + "\n", out)


def _parse_set(spec):
    if spec.strip() == "":
        return ()
    return canon_face(int(tok) for tok in spec.split(","))


def cmd_vertices(args):
    cx = _read_complex(args.complex)
    vm = VERTEX_BUILDERS[args.polytope](cx)
    _write(ser.vertex_csv(vm), args.out)
    return 0


def cmd_hrep(args):
    cx = _read_complex(args.complex)
    mp, md = _caps()
    rep = hrep(cx, method=args.method, max_points=mp, max_dim=md)
    _emit_json(ser.hrep_to_dict(rep, cx), args.out)
    return 0


def cmd_switch(args):
    cx = _read_complex(args.complex)
    iq = ser.ineq_from_dict(_read_json(args.ineq))
    I = _parse_set(args.set)
    fn = {"gcut": switch_gcut, "corr": switch_corr, "marg": switch_marg}[args.space]
    result = fn(iq, I, cx)
    out = ser.ineq_to_dict(result)
    out["switch_set"] = list(I)
    _emit_json(out, args.out)
    return 0


def cmd_transform(args):
    cx = _read_complex(args.complex)
    pair = (args.src, args.dst)
    if pair == ("corr", "gcut"):
        matrices = [phi(cx)]
    elif pair == ("gcut", "corr"):
        matrices = [psi(cx)]
    elif pair == ("marg", "corr"):
        matrices = [omega(cx)]
    elif pair == ("corr", "marg"):
        matrices = [pi_map(cx)]
    elif pair == ("marg", "gcut"):
        matrices = [phi(cx).mul(omega(cx))]
    elif pair == ("gcut", "marg"):
        matrices = [pi_map(cx).mul(psi(cx))]
    else:
        raise GencutError(f"no transform from {args.src} to {args.dst}")
    out = ser.matrix_to_dict(matrices[0])
    if args.dst == "marg":
        out["translation"] = {ser.label_key(k): ser.frac_str(v)
                              for k, v in u_empty(cx).items() if v}
    _emit_json(out, args.out)
    return 0


def cmd_gale(args):
    cx = _read_complex(args.complex)
    gt = gale(gcut_vertices(cx))
    rows = {face_key(lab): [ser.frac_str(x) for x in gt.rows[lab]]
            for lab in gt.col_labels}
    _emit_json({"columns": [face_key(l) for l in gt.col_labels],
                "kernel_dim": gt.kernel_dim,
                "rows": rows}, args.out)
    return 0


def cmd_cofacets(args):
    cx = _read_complex(args.complex)
    gt = gale(gcut_vertices(cx))
    cfs = cofacets(gt)
    _emit_json({"cofacets": [[face_key(l) for l in cf.labels] for cf in cfs]}, args.out)
    return 0


def cmd_hull(args):
    with open(args.points) as fh:
        labels, points = ser.parse_points_csv(fh.read())
    mp, md = _caps()
    res = hull(points, max_points=mp, max_dim=md)

    def as_ineq(a, b):
        return ser.ineq_to_dict(LinearInequality(dict(zip(labels, a)), b))

    _emit_json({
        "dim": res.dim,
        "facets": [as_ineq(a, b) for a, b in res.facets],
        "equalities": [as_ineq(a, b) for a, b in res.affine_hull],
        "triangulation": [list(s) for s in res.triangulation],
        "normalized_volume": str(res.normalized_volume),
    }, args.out)
    return 0


def cmd_volume(args):
    cx = _read_complex(args.complex)
    mp, md = _caps()
    vol = normalized_volume(gcut_points(cx), max_points=mp, max_dim=md)
    _emit_json({"normalized_volume": str(vol)}, args.out)
    return 0


def cmd_degree(args):
    cx = _read_complex(args.complex)
    mp, md = _caps()
    if args.family == "auto":
        res = degree_mod.degree_of_complex(cx, check_volume=args.check_volume,
                                           max_points=mp, max_dim=md)
    else:
        res = _forced_degree(cx, args.family)
        if args.check_volume and not res.conjectural:
            vol = normalized_volume(gcut_points(cx), max_points=mp, max_dim=md)
            if vol != res.value:
                raise GencutError(f"volume {vol} contradicts formula value {res.value}")
            res.verified_by_volume = True
    _emit_json({"value": str(res.value),
                "formula": res.formula_tag,
                "conjectural": res.conjectural,
                "volume_checked": bool(res.verified_by_volume)}, args.out)
    return 0


def _forced_degree(cx, family):
    verts = cx.vertices()
    if family == "turtle":
        return degree_mod.degree_turtle(len(verts), len(cx.facets))
    if family == "boundary":
        return degree_mod.degree_boundary_simplex(len(verts))
    if family == "disjoint-simplices":
        sizes = sorted(len(f) for f in cx.facets)
        if len(sizes) != 2:
            raise GencutError("disjoint-simplices needs exactly two facets")
        return degree_mod.degree_disjoint_simplices(*sizes)
    if family == "conjecture-lawrence":
        match = degree_mod._match_lawrence_two_simplices(cx)
        if match is None:
            raise GencutError("complex is not a Lawrence lifting of two simplices")
        return degree_mod.conjecture_lawrence(*sorted(match))
    if family == "volume":
        mp, md = _caps()
        vol = normalized_volume(gcut_points(cx), max_points=mp, max_dim=md)
        return degree_mod.DegreeResult(vol, "volume", verified_by_volume=True)
    raise GencutError(f"unknown degree family {family!r}")


def cmd_member(args):
    point = {ser.parse_label(k): ser.parse_frac(v)
             for k, v in _read_json(args.point).items()}
    rep = ser.hrep_from_dict(_read_json(args.hrep))
    ok = membership(point, rep, mode=args.mode)
    _emit_json({"member": ok, "mode": args.mode}, args.out)
    return 0


def cmd_verify(args):
    cx = _read_complex(args.complex)
    mp, md = _caps()
    equal, missing, extra, family = verify_hrep(cx, max_points=mp, max_dim=md)
    _emit_json({"family": family, "equal": equal,
                "missing": [[list(map(str, a)), str(b)] for a, b in missing],
                "extra": [[list(map(str, a)), str(b)] for a, b in extra]}, args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="gencut",
                                description="marginal / correlation / generalized "
                                            "cut polytope toolkit")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    sp = sub.add_parser("vertices", help="vertex matrix as CSV")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--polytope", required=True, choices=sorted(VERTEX_BUILDERS))
    common(sp)
    sp.set_defaults(fn=cmd_vertices)

    sp = sub.add_parser("hrep", help="facet description by family recognition")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--method", default="auto", choices=["auto", "oracle"])
    common(sp)
    sp.set_defaults(fn=cmd_hrep)

    sp = sub.add_parser("switch", help="switch an inequality by a vertex subset")
    sp.add_argument("--ineq", required=True)
    sp.add_argument("--set", required=True, help="comma-separated labels, empty for {}")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--space", default="gcut", choices=["gcut", "corr", "marg"])
    common(sp)
    sp.set_defaults(fn=cmd_switch)

    sp = sub.add_parser("transform", help="matrix of a polytope-to-polytope map")
    sp.add_argument("--from", dest="src", required=True, choices=["marg", "corr", "gcut"])
    sp.add_argument("--to", dest="dst", required=True, choices=["marg", "corr", "gcut"])
    sp.add_argument("--complex", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_transform)

    sp = sub.add_parser("gale", help="Gale transform of the gcut vertices")
    sp.add_argument("--complex", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_gale)

    sp = sub.add_parser("cofacets", help="co-facets via the Gale transform")
    sp.add_argument("--complex", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_cofacets)

    sp = sub.add_parser("hull", help="facets/triangulation/volume of CSV points")
    sp.add_argument("--points", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_hull)

    sp = sub.add_parser("volume", help="normalized volume of the gcut polytope")
    sp.add_argument("--complex", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_volume)

    sp = sub.add_parser("degree", help="toric degree by formula or volume")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--family", default="auto",
                    choices=["auto", "turtle", "boundary", "disjoint-simplices",
                             "conjecture-lawrence", "volume"])
    sp.add_argument("--check-volume", action="store_true")
    common(sp)
    sp.set_defaults(fn=cmd_degree)

    sp = sub.add_parser("member", help="H-representation membership test")
    sp.add_argument("--point", required=True)
    sp.add_argument("--hrep", required=True)
    sp.add_argument("--mode", default="closure", choices=["closure", "relint"])
    common(sp)
    sp.set_defaults(fn=cmd_member)

    sp = sub.add_parser("verify", help="closed form vs hull oracle")
    sp.add_argument("--complex", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GencutError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
