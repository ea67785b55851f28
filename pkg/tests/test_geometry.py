import pytest

from minsphere import construct as C
from minsphere.curves import VectorCurve, osculating_flag, veronese
from minsphere.errors import IsotropicSeed, NonOrthogonalFrames, ZeroMetric
from minsphere.geometry import (
    PolyMatrix,
    cpn_minimality_residual,
    degree_relation_check,
    gauss_curvature,
    harmonicity_residual,
    mixed_pair_sff_closed_form,
    pair_geometry,
    projector,
    reflection,
    sff_norm,
    tangent_data,
)
from minsphere.polyring import ONE, Z, ZBAR, BiPoly, RationalFn
from minsphere.scalar import I, RadicalScalar

X = Z * ZBAR
P = ONE + X


def over_square(c):
    return RationalFn(BiPoly.const(RadicalScalar.of(c)), P * P)


def test_projector_of_constant_frame():
    phi = projector([VectorCurve.constant([1, 0, 0])])
    expected = PolyMatrix.from_entries([[RationalFn.of(1 if i == j == 0 else 0) for j in range(3)]
                                        for i in range(3)])
    assert phi == expected
    assert phi.invariant_report() == {"idempotent": True, "hermitian": True, "trace_is_rank": True,
                                      "real": True}


def test_projector_rejects_non_orthogonal_frames():
    with pytest.raises(NonOrthogonalFrames) as info:
        projector([VectorCurve.constant([1, 0]), VectorCurve.constant([1, 1])])
    assert info.value.pair == (0, 1)
    assert info.value.pairing == 1


def test_projector_onto_line_of_quadric_curve():
    f = VectorCurve([ONE, BiPoly.const(I), Z])
    phi = projector([f])
    assert phi.is_idempotent() and phi.is_hermitian()
    assert phi.trace_value() == 1
    assert not phi.is_real()
    assert phi.entry(0, 2) == RationalFn(ZBAR, ONE.scale(2) + X)


def test_reflection_is_an_involution():
    phi = C.assemble_real_pair(C.curve_conic())
    s = reflection(phi)
    assert (s * s).reduce() == PolyMatrix.identity(6)
    assert s.trace().is_constant() == 2 * 2 - 6


def test_constant_projector_has_zero_metric():
    phi = projector([VectorCurve.constant([1, 0, 0]), VectorCurve.constant([0, 1, 0])])
    t = pair_geometry(phi)
    assert t.lambda2.is_zero()
    with pytest.raises(ZeroMetric):
        gauss_curvature(t.lambda2)
    with pytest.raises(ZeroMetric):
        sff_norm(t)


def test_curvature_of_round_metrics():
    assert gauss_curvature(over_square(4)) == 1
    assert gauss_curvature(over_square(6)) == RadicalScalar.of(2) / 3


def test_curvature_is_scale_covariant():
    base = gauss_curvature(over_square(1))
    assert gauss_curvature(over_square(3)) * 3 == base


@pytest.mark.parametrize("make, lam, k, b", [
    (C.curve_cubic, 6, RadicalScalar.of(2) / 3, None),
    (C.curve_conic, 4, 1, RadicalScalar.of(3) / 2),
    (C.curve_isotropic_conic, 4, 1, 2),
    (C.curve_veronese_middle, 8, RadicalScalar.of(1) / 2, 0),
])
def test_real_pair_geometry(make, lam, k, b):
    t = pair_geometry(C.assemble_real_pair(make()))
    assert t.lambda2 == over_square(lam)
    assert gauss_curvature(t.lambda2) == k
    if b is not None:
        assert sff_norm(t) == b
    assert harmonicity_residual(t).is_zero()


def test_cubic_pair_is_not_homogeneous():
    b = sff_norm(pair_geometry(C.assemble_real_pair(C.curve_cubic())))
    assert b.is_constant() is None
    # 8/3 at the origin, dipping to 16/9 on the unit circle
    assert b.eval(0) == pytest.approx(8 / 3)
    assert b.eval(1) == pytest.approx(16 / 9)


def test_quartic_sum_pair_geometry():
    t = pair_geometry(C.assemble_sum_pair(C.curve_quartic_middle(), C.c0()))
    assert t.lambda2 == over_square(12)
    assert gauss_curvature(t.lambda2) == RadicalScalar.of(1) / 3
    assert sff_norm(t) == RadicalScalar.of(4) / 3
    assert harmonicity_residual(t).is_zero()


def test_harmonicity_negative_control():
    # the line through (1, zbar, z) is not harmonic
    t = pair_geometry(projector([VectorCurve([ONE, ZBAR, Z])]))
    assert not harmonicity_residual(t).is_zero()


def test_cpn_residual_vanishes_on_veronese():
    for i in range(4):
        assert all(r.is_zero() for r in cpn_minimality_residual(veronese(3, i)))


def test_cpn_residual_is_scale_invariant():
    f = veronese(2, 1)
    scaled = VectorCurve([c * P for c in f])
    assert all(r.is_zero() for r in cpn_minimality_residual(scaled))


def test_cpn_residual_detects_non_harmonic_line():
    f = VectorCurve([ONE, ZBAR, Z])
    assert not all(r.is_zero() for r in cpn_minimality_residual(f))
    assert not all(r.is_zero() for r in cpn_minimality_residual(C.curve_quadric_lift()))


def test_degree_relation_on_veronese_flag():
    checks = degree_relation_check(osculating_flag(veronese(4, 0)))
    assert [c.passed for c in checks] == [True] * 4
    assert [c.value for c in checks] == [-2] * 4


def test_degree_relation_fails_on_ramified_curve():
    checks = degree_relation_check(osculating_flag(VectorCurve([ONE, Z * Z])))
    assert [(c.index, c.value, c.passed) for c in checks] == [(0, -3, False)]


def test_closed_form_matches_direct_computation():
    for make in (C.curve_cubic, C.curve_conic):
        f = make()
        direct = sff_norm(pair_geometry(C.assemble_real_pair(f)))
        assert mixed_pair_sff_closed_form(f) == direct


def test_closed_form_requires_isotropy():
    with pytest.raises(IsotropicSeed):
        mixed_pair_sff_closed_form(veronese(2, 0))


def test_tangent_data_is_traceless_and_skew():
    t = tangent_data(reflection(C.assemble_real_pair(C.curve_conic())))
    assert t.a_z.trace().is_zero()
    assert (t.a_z.adjoint() + t.a_zbar).reduce(t.hints).is_zero()


def test_poly_matrix_json_round_trip():
    phi = C.assemble_real_pair(C.curve_isotropic_conic())
    assert PolyMatrix.from_json(phi.to_json()) == phi
