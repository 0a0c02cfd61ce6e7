from __future__ import annotations

import json
import subprocess
import sys

import pytest

from kerdock_lab.cli import main


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    assert main(["code", "build", "--family", "binary-kerdock", "--m", "3", "--out", str(d / "k.json")]) == 0
    assert main(["mub", "from-code", str(d / "k.json"), "--out", str(d / "mub"),
                 "--manifest", str(d / "mub.manifest.json")]) == 0
    return d


def run(*argv):
    return subprocess.run([sys.executable, "-m", "kerdock_lab.cli", *argv], capture_output=True, text=True)


def test_outputs_written(workdir):
    names = {p.name for p in (workdir / "mub").iterdir()}
    assert {"lines.json", "bases.json", "config_Y.json", "scheme_Y.json", "scheme_X.json"} <= names
    man = json.loads((workdir / "mub.manifest.json").read_text())
    assert man["passed"] and man["command"] == "mub from-code"


def test_code_build_deterministic(workdir, tmp_path):
    out = tmp_path / "k2.json"
    assert main(["code", "build", "--family", "binary-kerdock", "--m", "3", "--out", str(out)]) == 0
    assert out.read_bytes() == (workdir / "k.json").read_bytes()


def test_code_stats(workdir, tmp_path, capsys):
    out = tmp_path / "stats.json"
    assert main(["code", "stats", str(workdir / "k.json"), "--out", str(out)]) == 0
    stats = json.loads(out.read_text())
    assert stats["size"] == 256


@pytest.mark.parametrize("fam", ["Y", "Z", "X"])
def test_scheme_verify(workdir, tmp_path, fam):
    rc = main(["scheme", "verify", str(workdir / "mub" / f"scheme_{fam}.json"), "--expect", "closed-form",
               "--family", fam, "--N", "16", "--manifest", str(tmp_path / "m.json")])
    assert rc == 0


def test_scheme_verify_wrong_family_fails(workdir, tmp_path):
    rc = main(["scheme", "verify", str(workdir / "mub" / "scheme_Y.json"), "--expect", "closed-form",
               "--family", "Z", "--N", "16", "--manifest", str(tmp_path / "m.json")])
    assert rc == 1


def test_eigen_csv(workdir, tmp_path):
    out = tmp_path / "P.csv"
    assert main(["scheme", "eigen", str(workdir / "mub" / "scheme_Y.json"), "--format", "csv", "--matrix", "P",
                 "--align", "Y", "--N", "16", "--out", str(out)]) == 0
    rows = out.read_text().split()
    assert rows == ["1,14,42,7", "1,-6,6,-1", "1,2,-2,-1", "1,-2,-6,7"]


def test_eigen_deterministic(workdir, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["scheme", "eigen", str(workdir / "mub" / "scheme_Z.json"), "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_design_strength(workdir, tmp_path):
    m = str(tmp_path / "m.json")
    assert main(["design", "strength", str(workdir / "mub" / "config_Y.json"), "--expect", "3", "--manifest", m]) == 0
    assert main(["design", "strength", str(workdir / "mub" / "config_X.json"), "--expect", "3", "--manifest", m]) == 1


def test_bound(tmp_path):
    out = tmp_path / "b.json"
    assert main(["bound", "delsarte", "--N", "64", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["bound"] == "1024/1"


def test_lattice_pipeline(tmp_path):
    code, lat, th = tmp_path / "s.json", tmp_path / "l.json", tmp_path / "t.json"
    assert main(["code", "build", "--family", "simplex-punctured", "--out", str(code)]) == 0
    assert main(["lattice", "construction-a", str(code), "--out", str(lat)]) == 0
    assert main(["lattice", "theta", str(lat), "--max-norm", "8", "--out", str(th)]) == 0
    assert json.loads(th.read_text())["coeffs"] == {"0": 1, "4": 28, "7": 1024, "8": 2156}


def test_lattice_nonlinear_rejected(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"alphabet": "F2", "length": 3, "words": ["000", "110", "011"]}))
    assert main(["lattice", "construction-a", str(p)]) == 2


def test_bw16(workdir, tmp_path):
    out = tmp_path / "bw.json"
    assert main(["lattice", "bw16-check", str(workdir / "mub"), "--out", str(out)]) == 0
    r = json.loads(out.read_text())
    assert r["passed"] and r["minimal_count"] == 4320


def test_empty_scheme_rejected(tmp_path):
    p = tmp_path / "e.json"
    p.write_text(json.dumps({"n": 0, "d": 0, "classes": []}))
    assert main(["scheme", "verify", str(p)]) == 2


def test_missing_file():
    assert main(["code", "stats", "/nonexistent/file.json"]) == 2


def test_bad_m_exit_code():
    r = run("verify-paper", "--m", "4")
    assert r.returncode == 2


def test_help():
    r = run("--help")
    assert r.returncode == 0 and "verify-paper" in r.stdout
