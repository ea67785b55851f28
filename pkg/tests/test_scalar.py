import math

import pytest
from gmpy2 import mpq
from hypothesis import given

from minsphere.scalar import I, ONE, ZERO, RadicalScalar, square_free_split, sqrt

from conftest import nonzero_scalars, scalars


def q(s):
    return RadicalScalar.of(mpq(s))


def test_radicand_collapse():
    assert sqrt(2) * sqrt(2) == 2


def test_coprime_radicands_multiply():
    assert sqrt(2) * sqrt(3) == sqrt(6)


def test_common_radicand_sums():
    half_root2 = sqrt(2) * mpq(1, 2)
    assert half_root2 + half_root2 == sqrt(2)


def test_shared_factor_is_extracted():
    # sqrt(6) * sqrt(10) = 2 sqrt(15)
    assert sqrt(6) * sqrt(10) == sqrt(15) * 2


def test_sqrt_of_non_square_free_integer():
    assert sqrt(8) == sqrt(2) * 2
    assert sqrt(12) == sqrt(3) * 2
    assert sqrt(-3) == I * sqrt(3)


def test_square_free_split():
    assert square_free_split(72) == (6, 2)
    assert square_free_split(30) == (1, 30)


def test_conjugate_examples():
    assert (ONE + I).conjugate() == ONE - I
    assert (I * sqrt(2)).conjugate() == -(I * sqrt(2))
    assert sqrt(3).conjugate() == sqrt(3)


def test_inverse_examples():
    assert RadicalScalar.of(2).inverse() == q("1/2")
    assert sqrt(2).inverse() == sqrt(2) * mpq(1, 2)
    assert (ONE + sqrt(2)).inverse() == sqrt(2) - 1


def test_inverse_of_mixed_radicals():
    a = ONE + sqrt(2) + sqrt(3) * I + sqrt(5)
    assert a * a.inverse() == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_to_float_examples():
    assert sqrt(2).to_float() == pytest.approx(math.sqrt(2), rel=1e-15)
    assert I.to_float() == 1j
    assert (sqrt(8) * mpq(1, 3)).to_float().real == pytest.approx(0.9428090415820634, rel=1e-15)


def test_canonical_form_has_no_zero_terms():
    a = sqrt(2) - sqrt(2)
    assert a.is_zero() and a.terms == {}
    assert RadicalScalar({4: (1, 0)}) == RadicalScalar.of(2)


def test_rational_queries():
    assert q("3/4").is_rational() and q("3/4").rational_value() == mpq(3, 4)
    assert not sqrt(2).is_rational()
    assert I.is_gaussian_rational() and not I.is_real()
    with pytest.raises(ValueError):
        sqrt(2).rational_value()


def test_float_coefficients_are_rejected():
    with pytest.raises(TypeError):
        RadicalScalar.of(1j)


def test_json_round_trip_is_bit_exact():
    a = (sqrt(10) * mpq(-7, 3) + I * mpq(2, 9)) * (ONE + sqrt(3))
    data = a.to_json()
    assert RadicalScalar.from_json(data) == a
    assert RadicalScalar.from_json(data).to_json() == data
    assert data[0] == {"radicand": 1, "re": "0/1", "im": "2/9"}


def test_from_json_rejects_bad_radicand():
    with pytest.raises(ValueError):
        RadicalScalar.from_json([{"radicand": 0, "re": "1/1", "im": "0/1"}])


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(nonzero_scalars)
def test_inverse_property(a):
    assert a * a.inverse() == 1


@given(scalars(), scalars())
def test_conjugation_is_multiplicative_involution(a, b):
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@given(scalars())
def test_renormalizing_changes_nothing(a):
    assert RadicalScalar(a.terms) == a
    assert RadicalScalar(a.terms).terms == a.terms


@given(scalars(), scalars())
def test_float_image_is_multiplicative(a, b):
    lhs = (a * b).to_float()
    rhs = a.to_float() * b.to_float()
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))
