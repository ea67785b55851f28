"""The bundled fixture catalog.

A catalog directory holds ``catalog.json`` plus ``curves/*.json`` and
``matrices/*.json``.  Each catalog entry names its curve and matrix files,
a kind (which decides the checks that run) and expected values, each with a
short citation of where the value comes from.

The bundled catalog is generated from the constructors in
:mod:`minsphere.construct` by :func:`write_catalog`; a test keeps the two in
sync.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from . import construct as C
from .curves import VectorCurve, veronese
from .polyring import BiPoly, RationalFn
from .scalar import RadicalScalar

DATA_DIR = Path(__file__).resolve().parent / "data"

REAL_PAIR = "real-pair"
SUM_PAIR = "sum-pair"
VERONESE = "veronese"


@dataclass
class Expectation:
    check: str
    citation: str
    value: Any  # JSON-ready

    def to_json(self) -> dict:
        return {"check": self.check, "citation": self.citation, "value": self.value}


@dataclass
class Fixture:
    id: str
    kind: str
    description: str
    curves: Dict[str, VectorCurve] = field(default_factory=dict)
    matrices: Dict[str, list] = field(default_factory=dict)
    params: Dict[str, Any] = field(default_factory=dict)
    expected: List[Expectation] = field(default_factory=list)

    def expectation(self, check: str) -> Optional[Expectation]:
        for e in self.expected:
            if e.check == check:
                return e
        return None


def _rf(num: BiPoly, den: BiPoly = None) -> dict:
    return RationalFn(num, den).to_json()


def _radial(coeffs) -> BiPoly:
    """``sum c_k (z zbar)^k``."""
    return BiPoly({(k, k): RadicalScalar.of(c) for k, c in enumerate(coeffs) if c})


def _over_square(c) -> dict:
    # c / (1 + z zbar)^2
    return _rf(BiPoly.const(RadicalScalar.of(c)), _radial([1, 2, 1]))


def _const(c) -> dict:
    return _rf(BiPoly.const(RadicalScalar.of(c)))


def _q(text: str) -> RadicalScalar:
    from gmpy2 import mpq

    return RadicalScalar.of(mpq(text))


def build_catalog() -> List[Fixture]:
    """All fixtures, built from the exact constructors."""
    fx: List[Fixture] = []

    # B = 8/3 - 32 x / (9 (1+x)^2) over a common denominator
    cubic_b = _rf(_radial([_q("8/3"), _q("16/9"), _q("8/3")]), _radial([1, 2, 1]))
    fx.append(Fixture(
        "cubic-pair", REAL_PAIR,
        "real mixed pair over the twisted cubic: non-homogeneous, K = 2/3",
        curves={"f": C.curve_cubic()},
        matrices={"U": C.u_cubic(), "W": C.w_cubic()},
        params={"m": 3, "veronese_index": 0, "scale": [{"radicand": 2, "re": "1/1", "im": "0/1"}],
                "pattern": "cubic", "closed_form": True},
        expected=[
            Expectation("isotropy", "mixed pair contact conditions (0, 1 vanish; 2 does not)",
                        [True, True, False]),
            Expectation("lambda2", "induced metric is twice the cubic's own metric", _over_square(6)),
            Expectation("gauss_curvature", "stated curvature of the cubic pair", _const(_q("2/3"))),
            Expectation("sff_norm", "stated second fundamental form of the cubic pair", cubic_b),
            Expectation("sff_constant", "non-homogeneity: the norm of B is not constant", False),
        ],
    ))
    fx.append(Fixture(
        "conic-pair", REAL_PAIR,
        "real mixed pair over a conic with nonzero second contact, K = 1",
        curves={"f": C.curve_conic()},
        matrices={"U": C.u_conic(), "W": C.w_conic()},
        params={"m": 2, "veronese_index": 0, "scale": [{"radicand": 2, "re": "1/1", "im": "0/1"}],
                "pattern": "conic", "closed_form": True},
        expected=[
            Expectation("isotropy", "mixed pair contact conditions (0, 1 vanish; 2 does not)",
                        [True, True, False]),
            Expectation("lambda2", "induced metric is twice the conic's own metric", _over_square(4)),
            Expectation("gauss_curvature", "stated curvature of the conic pair", _const(1)),
            Expectation("sff_norm", "stated second fundamental form of the conic pair", _const(_q("3/2"))),
            Expectation("sff_constant", "the norm of B is constant", True),
        ],
    ))
    fx.append(Fixture(
        "isotropic-conic-pair", REAL_PAIR,
        "holomorphic conic in a totally isotropic 3-plane of the quadric, K = 1",
        curves={"f": C.curve_isotropic_conic()},
        matrices={"U": C.u0_completed()},
        params={"m": 2, "veronese_index": 0, "scale": [{"radicand": 2, "re": "1/1", "im": "0/1"}],
                "pattern": "zero-block", "closed_form": False},
        expected=[
            Expectation("isotropy", "derived: every contact order vanishes for this conic",
                        [True, True, True]),
            Expectation("lambda2", "derived: twice the conic's own metric", _over_square(4)),
            Expectation("gauss_curvature", "stated curvature of the isotropic conic pair", _const(1)),
            Expectation("sff_norm", "derived: independent symbolic computation", _const(2)),
            Expectation("sff_constant", "parallel second fundamental form", True),
        ],
    ))
    fx.append(Fixture(
        "veronese-middle-pair", REAL_PAIR,
        "real pair over the middle Veronese curve of CP^2: totally geodesic, K = 1/2",
        curves={"f": C.curve_veronese_middle()},
        matrices={"U": C.u0_completed()},
        params={"m": 2, "veronese_index": 1, "scale": [{"radicand": 1, "re": "1/1", "im": "0/1"}],
                "pattern": "zero-block", "closed_form": False},
        expected=[
            Expectation("lambda2", "derived: sum of the two Fubini-Study terms of the middle curve",
                        _over_square(8)),
            Expectation("gauss_curvature", "stated curvature of the totally geodesic sphere",
                        _const(_q("1/2"))),
            Expectation("sff_norm", "stated: the sphere is totally geodesic", _const(0)),
            Expectation("sff_constant", "the norm of B is constant", True),
        ],
    ))
    fx.append(Fixture(
        "quartic-middle-sum", SUM_PAIR,
        "middle Veronese curve of CP^4 in real position, summed with a constant vector, K = 1/3",
        curves={"f": C.curve_quartic_middle(), "g": C.c0(), "lift": C.curve_quadric_lift()},
        matrices={"U": C.u1()},
        params={"m": 4, "veronese_index": 2,
                "scale": [{"radicand": 2, "re": "1/12", "im": "0/1"}]},
        expected=[
            Expectation("lambda2", "derived: Veronese metric l_1 + l_2 of CP^4", _over_square(12)),
            Expectation("gauss_curvature", "stated curvature of the quartic sum pair", _const(_q("1/3"))),
            Expectation("sff_norm", "derived: independent symbolic computation", _const(_q("4/3"))),
            Expectation("sff_constant", "parallel second fundamental form", True),
            Expectation("lift_cpn_minimal", "stated: the quadric lift is not minimal in CP^5", False),
        ],
    ))
    for n in (2, 3, 4, 5):
        degs = [(i + 1) * (n - i) for i in range(n + 1)]
        ks = [_const(RadicalScalar.of(4) / (n + 2 * i * (n - i))) for i in range(n + 1)]
        fx.append(Fixture(
            f"veronese-{n}", VERONESE,
            f"Veronese sequence of CP^{n}",
            curves={f"v{i}": veronese(n, i) for i in range(n + 1)},
            params={"n": n},
            expected=[
                Expectation("degrees", "osculating degrees (i+1)(n-i) of the Veronese flag", degs),
                Expectation("curvatures", "constant curvatures 4/(n + 2i(n-i))", ks),
                Expectation("degree_relation", "d_{i-1} - 2 d_i + d_{i+1} = -2 on unramified flags",
                            [True] * n),
                Expectation("cpn_minimal", "every member of a harmonic sequence is harmonic",
                            [True] * (n + 1)),
            ],
        ))
    return fx


# -- serialization ----------------------------------------------------------------

def _dump(obj, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


def write_catalog(directory: Path = DATA_DIR) -> Path:
    directory = Path(directory)
    entries = []
    for f in build_catalog():
        curves = {}
        for name, c in f.curves.items():
            rel = f"curves/{f.id}.{name}.json"
            _dump(c.to_json(), directory / rel)
            curves[name] = rel
        mats = {}
        for name, m in f.matrices.items():
            rel = f"matrices/{f.id}.{name}.json"
            _dump(C.matrix_to_json(m), directory / rel)
            mats[name] = rel
        entries.append({
            "id": f.id,
            "kind": f.kind,
            "description": f.description,
            "curves": curves,
            "matrices": mats,
            "params": f.params,
            "expected": [e.to_json() for e in f.expected],
        })
    path = directory / "catalog.json"
    _dump({"version": 1, "fixtures": entries}, path)
    return path


def load_curve(path) -> VectorCurve:
    return VectorCurve.from_json(json.loads(Path(path).read_text()))


def load_matrix(path) -> list:
    return C.matrix_from_json(json.loads(Path(path).read_text()))


def load_catalog(directory: Optional[Path] = None) -> List[Fixture]:
    directory = Path(directory) if directory is not None else DATA_DIR
    data = json.loads((directory / "catalog.json").read_text())
    out = []
    for e in data["fixtures"]:
        out.append(Fixture(
            e["id"], e["kind"], e.get("description", ""),
            curves={k: load_curve(directory / v) for k, v in e.get("curves", {}).items()},
            matrices={k: load_matrix(directory / v) for k, v in e.get("matrices", {}).items()},
            params=e.get("params", {}),
            expected=[Expectation(x["check"], x["citation"], x["value"]) for x in e.get("expected", [])],
        ))
    return out


def get_fixture(fid: str, directory: Optional[Path] = None) -> Fixture:
    for f in load_catalog(directory):
        if f.id == fid:
            return f
    raise KeyError(fid)


if __name__ == "__main__":  # pragma: no cover
    print(write_catalog())
