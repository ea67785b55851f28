"""Verification reports for catalog fixtures.

Every check compares an exact computed value with the catalog's expected value
(or with a structural requirement such as "residual is zero") and records the
outcome together with the citation string carried by the catalog.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, List, Optional

from . import construct as C
from .curves import (
    VectorCurve,
    isotropy_conditions,
    osculating_flag,
    quadric_residual,
    cpn_metric,
)
from .fixtures import REAL_PAIR, SUM_PAIR, VERONESE, Fixture
from .geometry import (
    cpn_minimality_residual,
    degree_relation_check,
    gauss_curvature,
    harmonicity_residual,
    mixed_pair_sff_closed_form,
    pair_geometry,
    sff_norm,
)
from .polyring import BiPoly, RationalFn
from .scalar import RadicalScalar

PASS, FAIL = "pass", "fail"


def to_jsonable(v: Any) -> Any:
    if isinstance(v, (RationalFn, BiPoly, VectorCurve)):
        return v.to_json()
    if isinstance(v, RadicalScalar):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [to_jsonable(x) for x in v]
    return v


def render(v: Any) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(render(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


@dataclass
class Check:
    name: str
    citation: str
    status: str
    expected: Any = None
    computed: Any = None
    witness: Any = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "citation": self.citation,
            "status": self.status,
            "expected": to_jsonable(self.expected),
            "computed": to_jsonable(self.computed),
            "witness": to_jsonable(self.witness),
        }

    def line(self) -> str:
        s = f"[{self.status.upper()}] {self.name}: {render(self.computed)}"
        if not self.passed:
            s += f" (expected {render(self.expected)})"
            if self.witness is not None:
                s += f"; witness {render(self.witness)}"
        return s + f"  <{self.citation}>"


@dataclass
class VerificationReport:
    fixture: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, citation, ok: bool, expected=None, computed=None, witness=None) -> Check:
        c = Check(name, citation, PASS if ok else FAIL, expected, computed, witness)
        self.checks.append(c)
        return c

    def guarded(self, name: str, citation: str, fn: Callable[[], None]) -> None:
        """Run ``fn``; an exception becomes a failed check instead of a skip."""
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - recorded as a failure
            self.add(name, citation, False, computed=f"{type(exc).__name__}: {exc}")

    def to_json(self) -> dict:
        return {
            "fixture": self.fixture,
            "status": PASS if self.passed else FAIL,
            "checks": [c.to_json() for c in self.checks],
        }

    def text(self) -> str:
        head = f"{self.fixture}: {'PASS' if self.passed else 'FAIL'}"
        return "\n".join([head] + ["  " + c.line() for c in self.checks])


def _expected_rf(fx: Fixture, check: str) -> Optional[RationalFn]:
    e = fx.expectation(check)
    return None if e is None else RationalFn.from_json(e.value)


def _compare_rf(rep: VerificationReport, fx: Fixture, check: str, computed: RationalFn) -> None:
    e = fx.expectation(check)
    if e is None:
        return
    exp = RationalFn.from_json(e.value)
    ok = computed == exp
    rep.add(check, e.citation, ok, exp, computed, None if ok else (computed - exp).num)


def _compare_plain(rep: VerificationReport, fx: Fixture, check: str, computed) -> None:
    e = fx.expectation(check)
    if e is None:
        return
    rep.add(check, e.citation, computed == e.value, e.value, computed)


def _projector_checks(rep: VerificationReport, phi, real: bool) -> None:
    inv = phi.invariant_report()
    rep.add("projector_idempotent", "orthogonal projector: phi^2 = phi", inv["idempotent"], True,
            inv["idempotent"])
    rep.add("projector_hermitian", "orthogonal projector: phi^* = phi", inv["hermitian"], True,
            inv["hermitian"])
    tr = phi.trace_value()
    rep.add("projector_trace", "trace equals the rank", inv["trace_is_rank"], phi.rank, tr)
    if real:
        rep.add("projector_real", "real Grassmannian: phi fixed by conjugation", inv["real"], True,
                inv["real"])


def _geometry_checks(rep: VerificationReport, fx: Fixture, phi) -> RationalFn:
    t = pair_geometry(phi)
    _compare_rf(rep, fx, "lambda2", t.lambda2)
    k = gauss_curvature(t.lambda2)
    _compare_rf(rep, fx, "gauss_curvature", k)
    b = sff_norm(t)
    _compare_rf(rep, fx, "sff_norm", b)
    _compare_plain(rep, fx, "sff_constant", b.is_constant() is not None)
    h = harmonicity_residual(t)
    rep.add("harmonicity", "harmonic map equation d_zbar A_z = [A_z, A_zbar]", h.is_zero(),
            True, h.is_zero(), None if h.is_zero() else _first_nonzero(h))
    return b


def _first_nonzero(m):
    for i, r in enumerate(m.rows):
        for j, e in enumerate(r):
            if e:
                return {"entry": [i, j], "value": m.entry(i, j).to_json()}
    return None


def _unitary_checks(rep: VerificationReport, fx: Fixture, f: VectorCurve) -> None:
    if "U" not in fx.matrices:
        return
    u = fx.matrices["U"]
    ok = C.is_unitary(u)
    rep.add("unitary", "U U^* = I", ok, True, ok)
    p = fx.params
    m, i = p["m"], p["veronese_index"]
    from .curves import veronese

    scale = RadicalScalar.from_json(p["scale"])
    img = veronese(m, i).padded(len(u)).apply(u).scale(scale).padded(f.dim)
    ok = img == f
    rep.add("unitary_image", f"curve is a unitary image of Veronese V_{i} of CP^{m}", ok, True, ok)
    w = C.mat_mul(C.transpose(u), u)
    if "W" in fx.matrices:
        ok = w == fx.matrices["W"]
        rep.add("w_equals_utu", "W = U^T U", ok, True, ok)
    pat = p.get("pattern")
    if pat:
        pr = C.w_pattern_check(w, pat)
        rep.add(f"w_pattern_{pat}", f"W satisfies the {pat} pattern", pr.passed, True, pr.passed,
                None if pr.passed else [v.constraint for v in pr.violations()])
    iso = fx.expectation("isotropy")
    if iso is not None and i == 0:
        res = [C.fundamental_identity_check(u, m, k) for k in range(3)]
        flags = [r.is_zero() for r in res]
        rep.add("fundamental_identities", "tr W V_0 V_k^T vanishes exactly when contact order k does",
                flags == iso.value, iso.value, flags)


def verify_fixture(fx: Fixture) -> VerificationReport:
    rep = VerificationReport(fx.id)
    if fx.kind == REAL_PAIR:
        _verify_real_pair(rep, fx)
    elif fx.kind == SUM_PAIR:
        _verify_sum_pair(rep, fx)
    elif fx.kind == VERONESE:
        _verify_veronese(rep, fx)
    else:
        rep.add("kind", "known fixture kind", False, "real-pair|sum-pair|veronese", fx.kind)
    if not rep.checks:
        rep.add("nonempty", "a fixture must run at least one check", False, ">0", 0)
    return rep


def _verify_real_pair(rep: VerificationReport, fx: Fixture) -> None:
    f = fx.curves["f"]
    q = quadric_residual(f)
    rep.add("quadric", "the curve lies on the quadric sum Z_k^2 = 0", q.is_zero(), 0, q)
    if f.is_holomorphic():
        _compare_plain(rep, fx, "isotropy", isotropy_conditions(f, 2))
    rep.guarded("unitary", "unitary data", lambda: _unitary_checks(rep, fx, f))

    def geometry():
        phi = C.assemble_real_pair(f)
        _projector_checks(rep, phi, real=True)
        b = _geometry_checks(rep, fx, phi)
        if fx.params.get("closed_form"):
            cf = mixed_pair_sff_closed_form(f)
            rep.add("sff_closed_form", "mixed pair closed form 2 d1/d0 - 2|<f0, conj f2>|^2/|f1|^4",
                    cf == b, b, cf)

    rep.guarded("geometry", "real pair geometry", geometry)


def _verify_sum_pair(rep: VerificationReport, fx: Fixture) -> None:
    f, g = fx.curves["f"], fx.curves["g"]
    rep.guarded("unitary", "unitary data", lambda: _unitary_checks(rep, fx, f))

    def geometry():
        phi = C.assemble_sum_pair(f, g)
        _projector_checks(rep, phi, real=True)
        _geometry_checks(rep, fx, phi)

    rep.guarded("geometry", "sum pair geometry", geometry)
    lift = fx.curves.get("lift")
    if lift is not None:
        q = quadric_residual(lift)
        rep.add("lift_quadric", "the lift lies on the quadric", q.is_zero(), 0, q)
        res = cpn_minimality_residual(lift)
        minimal = all(r.is_zero() for r in res)
        e = fx.expectation("lift_cpn_minimal")
        if e is not None:
            rep.add("lift_cpn_minimal", e.citation, minimal == e.value, e.value, minimal,
                    next((r for r in res if not r.is_zero()), None))


def _verify_veronese(rep: VerificationReport, fx: Fixture) -> None:
    n = fx.params["n"]
    flag = osculating_flag(fx.curves["v0"])
    _compare_plain(rep, fx, "degrees", list(flag.degrees))
    e = fx.expectation("curvatures")
    if e is not None:
        ks = [gauss_curvature(cpn_metric(flag, i)) for i in range(n + 1)]
        exp = [RationalFn.from_json(v) for v in e.value]
        rep.add("curvatures", e.citation, all(a == b for a, b in zip(ks, exp)) and len(ks) == len(exp),
                exp, ks)
    _compare_plain(rep, fx, "degree_relation", [r.passed for r in degree_relation_check(flag)])
    e = fx.expectation("cpn_minimal")
    if e is not None:
        flags = [all(r.is_zero() for r in cpn_minimality_residual(fx.curves[f"v{i}"]))
                 for i in range(n + 1)]
        rep.add("cpn_minimal", e.citation, flags == e.value, e.value, flags)
