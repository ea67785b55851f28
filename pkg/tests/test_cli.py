import json

import pytest

from minsphere import construct as C
from minsphere.cli import main
from minsphere.curves import VectorCurve
from minsphere.fixtures import DATA_DIR
from minsphere.polyring import ONE, Z
from minsphere.scalar import I

CURVES = DATA_DIR / "curves"
MATRICES = DATA_DIR / "matrices"


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_verify_all(capsys):
    assert main(["verify", "--all"]) == 0
    out = capsys.readouterr().out
    assert "cubic-pair: PASS" in out and "veronese-5: PASS" in out


def test_verify_json_is_deterministic_across_jobs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--all", "--json", str(a)]) == 0
    assert main(["verify", "--all", "--jobs", "2", "--json", str(b)]) == 0
    assert a.read_text() == b.read_text()
    data = json.loads(a.read_text())
    assert all(r["status"] == "pass" for r in data["reports"])


def test_verify_unknown_fixture(capsys):
    assert main(["verify", "bogus"]) == 2
    assert "unknown fixture" in capsys.readouterr().err


def test_verify_needs_ids(capsys):
    assert main(["verify"]) == 2


def test_verify_bad_fixture_dir(tmp_path):
    assert main(["verify", "--all", "--fixtures", str(tmp_path)]) == 2


def test_curvature_real_pair(capsys):
    assert main(["curvature", str(CURVES / "conic-pair.f.json"), "--json", "-"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["K_constant"] == [{"radicand": 1, "re": "1/1", "im": "0/1"}]
    assert data["sff_constant"] == [{"radicand": 1, "re": "3/2", "im": "0/1"}]


def test_curvature_sum_pair(capsys):
    args = ["curvature", str(CURVES / "quartic-middle-sum.f.json"), "--mode", "sum-pair",
            "--partner", str(CURVES / "quartic-middle-sum.g.json")]
    assert main(args) == 0
    out = capsys.readouterr().out
    assert "K = 1/3 (constant)" in out
    assert "|B|^2 = 4/3 (constant)" in out


def test_curvature_non_constant_sff(capsys):
    assert main(["curvature", str(CURVES / "cubic-pair.f.json")]) == 0
    out = capsys.readouterr().out
    assert "K = 2/3 (constant)" in out
    assert "|B|^2" in out and "|B|^2 = 8/3 (constant)" not in out


def test_curvature_errors(tmp_path, capsys):
    off_quadric = write(tmp_path, "v.json", VectorCurve([ONE, Z]).to_json())
    assert main(["curvature", off_quadric]) == 2
    assert main(["curvature", str(tmp_path / "missing.json")]) == 2
    assert main(["curvature", off_quadric, "--mode", "sum-pair"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["curvature", str(bad)]) == 2


def test_sequence_veronese(capsys):
    assert main(["sequence", str(CURVES / "veronese-3.v0.json"), "-k", "3"]) == 0
    out = capsys.readouterr().out
    assert " 0       3" in out and " 1       4" in out


def test_sequence_ramified_curve_fails(tmp_path, capsys):
    path = write(tmp_path, "r.json", VectorCurve([ONE, Z * Z]).to_json())
    assert main(["sequence", path, "-k", "1", "--json", "-"]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["degrees"] == [2, 1]
    check = data["reports"][0]["checks"][0]
    assert check["status"] == "fail" and check["computed"] == -3


def test_check_w(capsys):
    assert main(["check-w", str(MATRICES / "cubic-pair.W.json"), "--pattern", "cubic"]) == 0
    out = capsys.readouterr().out
    assert "i=0: 0" in out and "i=1: 0" in out


def test_check_w_from_u_and_mismatch(capsys):
    u = str(MATRICES / "conic-pair.U.json")
    assert main(["check-w", u, "--from-u", "--pattern", "conic"]) == 0
    capsys.readouterr()
    assert main(["check-w", u, "--from-u", "--pattern", "cubic", "--json", "-"]) == 1
    data = json.loads(capsys.readouterr().out)
    failed = [c["name"] for c in data["reports"][0]["checks"] if c["status"] == "fail"]
    assert failed == ["cubic: w11 + (2/3*sqrt(3))*w02 == 0", "cubic: w23 == 0"]
    assert len(data["fundamental_residuals"]) == 3


def test_check_w_rejects_non_unitary(tmp_path):
    path = write(tmp_path, "w.json", C.matrix_to_json(C.as_matrix([[1, 1], [1, 1]])))
    assert main(["check-w", path, "--pattern", "cubic"]) == 2


def test_mixed_pair(tmp_path, capsys):
    seed = write(tmp_path, "seed.json", VectorCurve.constant([1]).to_json())
    out = tmp_path / "f1.json"
    assert main(["mixed-pair", seed, "--out", str(out)]) == 0
    f1 = VectorCurve.from_json(json.loads(out.read_text()))
    assert f1 == VectorCurve([Z.scale(2), ONE - Z * Z, (ONE + Z * Z).scale(I)])
    iso = write(tmp_path, "iso.json", VectorCurve.constant([1, I]).to_json())
    assert main(["mixed-pair", iso]) == 2


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])
