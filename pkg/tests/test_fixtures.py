import json

import pytest

from minsphere import construct as C
from minsphere.fixtures import DATA_DIR, build_catalog, get_fixture, load_catalog, write_catalog
from minsphere.verify import verify_fixture

IDS = [f.id for f in build_catalog()]


def test_bundled_catalog_is_in_sync(tmp_path):
    write_catalog(tmp_path)
    for path in sorted(tmp_path.rglob("*.json")):
        rel = path.relative_to(tmp_path)
        assert (DATA_DIR / rel).read_text() == path.read_text(), rel


def test_catalog_round_trip():
    built = {f.id: f for f in build_catalog()}
    for fx in load_catalog():
        ref = built[fx.id]
        assert fx.kind == ref.kind
        assert fx.curves == ref.curves
        assert fx.matrices == ref.matrices
        assert fx.params == ref.params
        assert [e.to_json() for e in fx.expected] == [e.to_json() for e in ref.expected]


def test_every_expectation_has_a_citation():
    for fx in build_catalog():
        assert fx.expected
        for e in fx.expected:
            assert e.citation.strip()


def test_get_fixture():
    assert get_fixture("conic-pair").matrices["U"] == C.u_conic()
    with pytest.raises(KeyError):
        get_fixture("no-such-fixture")


@pytest.mark.parametrize("fid", IDS)
def test_fixture_verifies(fid):
    rep = verify_fixture(get_fixture(fid))
    assert rep.passed, rep.text()
    assert len(rep.checks) >= 4


def test_corrupted_expectation_fails(tmp_path):
    write_catalog(tmp_path)
    cat = json.loads((tmp_path / "catalog.json").read_text())
    conic = next(e for e in cat["fixtures"] if e["id"] == "conic-pair")
    k = next(x for x in conic["expected"] if x["check"] == "gauss_curvature")
    k["value"]["num"][0]["coeff"][0]["re"] = "2/1"  # K = 2 instead of 1
    (tmp_path / "catalog.json").write_text(json.dumps(cat))
    rep = verify_fixture(get_fixture("conic-pair", tmp_path))
    failed = [c.name for c in rep.checks if not c.passed]
    assert failed == ["gauss_curvature"]
