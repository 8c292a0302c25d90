"""End-to-end command line checks (deterministic outputs, exit codes)."""

import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "gencut.cli"]

PATH_COMPLEX = {"ground_set": [1, 2, 3], "facets": [[1, 2], [2, 3]]}
TWO_TRI = {"ground_set": [1, 2, 3, 4], "facets": [[1, 2, 3], [2, 3, 4]]}
D22 = {"ground_set": [1, 2, 3, 4], "facets": [[1, 3], [1, 4], [2, 3], [2, 4]]}


def run(args, **kw):
    return subprocess.run(CLI + args, capture_output=True, text=True, **kw)


@pytest.fixture
def path_file(tmp_path):
    f = tmp_path / "path.json"
    f.write_text(json.dumps(PATH_COMPLEX))
    return str(f)


def test_vertices_gcut_csv_matches_printed_matrix(tmp_path):
    f = tmp_path / "cx.json"
    f.write_text(json.dumps(TWO_TRI))
    r = run(["vertices", "--complex", str(f), "--polytope", "gcut"])
    assert r.returncode == 0
    lines = r.stdout.strip().split("\n")
    assert lines[0] == 'subset,1,2,3,4,"1,2","1,3","2,3","2,4","3,4","1,2,3","2,3,4"'
    assert lines[1] == ",0,0,0,0,0,0,0,0,0,0,0"
    assert lines[2] == "1,1,0,0,0,1,1,0,0,0,1,0"
    assert len(lines) == 17


def test_vertices_deterministic(path_file):
    a = run(["vertices", "--complex", path_file, "--polytope", "marg"])
    b = run(["vertices", "--complex", path_file, "--polytope", "marg"])
    assert a.stdout == b.stdout and a.returncode == 0


def test_hrep_and_verify(path_file):
    r = run(["hrep", "--complex", path_file])
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["family"] == "turtle" and doc["complete"]
    assert len(doc["inequalities"]) == 8

    v = run(["verify", "--complex", path_file])
    assert v.returncode == 0
    assert json.loads(v.stdout)["equal"] is True


def test_hrep_oracle_round_trip(tmp_path, path_file):
    """vertices | hull equals hrep, after normalization."""
    csv_out = tmp_path / "pts.csv"
    r = run(["vertices", "--complex", path_file, "--polytope", "gcut",
             "--out", str(csv_out)])
    assert r.returncode == 0
    h = run(["hull", "--points", str(csv_out)])
    assert h.returncode == 0
    hull_doc = json.loads(h.stdout)
    rep_doc = json.loads(run(["hrep", "--complex", path_file]).stdout)

    def keyset(ineqs):
        out = set()
        for iq in ineqs:
            out.add((tuple(sorted(iq["coeffs"].items())), iq["rhs"]))
        return out

    assert keyset(hull_doc["facets"]) == keyset(rep_doc["inequalities"])
    assert hull_doc["normalized_volume"] == "4"


def test_switch_cli(tmp_path):
    cxf = tmp_path / "d22.json"
    cxf.write_text(json.dumps(D22))
    iqf = tmp_path / "iq.json"
    iqf.write_text(json.dumps({"coeffs": {"2": "1", "4": "1", "2,4": "1"}, "rhs": "2"}))
    r = run(["switch", "--ineq", str(iqf), "--set", "1,2,3,4",
             "--complex", str(cxf), "--space", "gcut"])
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["coeffs"] == {"2": "-1", "4": "-1", "2,4": "1"}
    assert doc["rhs"] == "0" and doc["switch_set"] == [1, 2, 3, 4]


def test_transform_cli(path_file):
    r = run(["transform", "--from", "corr", "--to", "gcut", "--complex", path_file])
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["rows"] == ["1", "2", "3", "1,2", "2,3"]
    assert [3, 0, "1"] in doc["entries"]  # phi has 1 at (face 12, face 1)

    t = run(["transform", "--from", "corr", "--to", "marg", "--complex", path_file])
    doc = json.loads(t.stdout)
    assert doc["translation"]["|1,2"] == "1"  # empty margin paired with facet 12


def test_gale_and_cofacets_cli(path_file):
    g = run(["gale", "--complex", path_file])
    assert g.returncode == 0
    doc = json.loads(g.stdout)
    assert doc["kernel_dim"] == 2
    c = run(["cofacets", "--complex", path_file])
    assert c.returncode == 0
    assert len(json.loads(c.stdout)["cofacets"]) == 8


def test_volume_and_degree_cli(tmp_path):
    cxf = tmp_path / "t32.json"
    cxf.write_text(json.dumps({"ground_set": [1, 2, 3], "facets": [[1, 3], [2, 3]]}))
    v = run(["volume", "--complex", str(cxf)])
    assert json.loads(v.stdout)["normalized_volume"] == "4"
    d = run(["degree", "--complex", str(cxf), "--check-volume"])
    doc = json.loads(d.stdout)
    assert doc == {"value": "4", "formula": "turtle",
                   "conjectural": False, "volume_checked": True}


def test_degree_conjecture_cli(tmp_path):
    cxf = tmp_path / "law22.json"
    cxf.write_text(json.dumps({"ground_set": [1, 2, 3, 4, 5],
                               "facets": [[1, 2, 3, 4], [1, 2, 5], [3, 4, 5]]}))
    d = run(["degree", "--complex", str(cxf)])
    doc = json.loads(d.stdout)
    assert doc["value"] == "4096" and doc["conjectural"] is True
    assert doc["volume_checked"] is False


def test_member_cli(tmp_path, path_file):
    rep = run(["hrep", "--complex", path_file]).stdout
    repf = tmp_path / "rep.json"
    repf.write_text(rep)
    ptf = tmp_path / "pt.json"
    ptf.write_text(json.dumps({"1": "1/2", "2": "1/2", "3": "1/2",
                               "1,2": "1/2", "2,3": "1/2"}))
    r = run(["member", "--point", str(ptf), "--hrep", str(repf), "--mode", "relint"])
    assert json.loads(r.stdout)["member"] is True

    out = run(["member", "--point", str(ptf), "--hrep", str(repf), "--mode", "closure"])
    assert json.loads(out.stdout)["member"] is True


def test_exit_codes(tmp_path, path_file):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["hrep", "--complex", str(bad)]).returncode == 2

    big = tmp_path / "big.json"
    big.write_text(json.dumps({"ground_set": list(range(1, 8)),
                               "facets": [list(range(1, 8))]}))
    r = run(["volume", "--complex", str(big)], env={"GCUT_MAX_VERTICES": "16",
                                                    "PATH": "/usr/bin:/bin"})
    assert r.returncode == 3

    clash = tmp_path / "clash.json"
    clash.write_text(json.dumps({"ground_set": [1], "facets": [[1, 2]]}))
    assert run(["hrep", "--complex", str(clash)]).returncode == 2
