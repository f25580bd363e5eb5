"""Base function evaluation: trivial values, parity, oracle agreement."""

import math

import pytest
from hypothesis import given, settings, strategies as st

import besstruve as bt
from besstruve import oracle
from besstruve.evaluation import DomainError
from besstruve.oracle import QuadratureRule, gauss_legendre_adaptive

# Frozen oracle values (quadrature of the defining integral representations,
# computed once with the oracle module at tol 1e-13).
J1_OVER_Z_AT_1 = 0.4400505857449335
H1_OVER_Z_AT_1 = 0.1984573362019444
J0_AT_1 = 0.7651976865579667


def test_j0_trivial():
    assert bt.bessel_j0(0.0).value == 1.0
    assert bt.bessel_j0(-3.0).value == bt.bessel_j0(3.0).value


def test_j0_against_classic_integral():
    # (2/pi) int_0^{pi/2} cos(z cos t) dt, an integral representation the
    # kernel family does not use.
    v, _, _ = gauss_legendre_adaptive(
        lambda t: math.cos(1.0 * math.cos(t)), 0.0, math.pi / 2,
        QuadratureRule(target_tol=1e-14),
    )
    assert bt.bessel_j0(1.0).value == pytest.approx(v * 2 / math.pi, abs=1e-13)
    assert bt.bessel_j0(1.0).value == pytest.approx(J0_AT_1, abs=1e-13)


def test_j1_trivial_and_oracle():
    assert bt.bessel_j1(0.0).value == 0.0
    assert bt.bessel_j1(-2.0).value == -bt.bessel_j1(2.0).value
    assert bt.bessel_j1(1.0).value == pytest.approx(J1_OVER_Z_AT_1, abs=1e-13)
    assert bt.bessel_j1(1.0).value == pytest.approx(
        oracle.quad_deriv_kernel("bessel", 0, 1.0), abs=1e-12
    )


def test_jn_trivial_and_recurrence_instance():
    assert bt.bessel_jn(0, 0.0).value == 1.0
    assert bt.bessel_jn(3, 0.0).value == 0.0
    z = 1.5
    expected = (2 / z) * bt.bessel_j1(z).value - bt.bessel_j0(z).value
    assert bt.bessel_jn(2, z).value == pytest.approx(expected, abs=1e-11)


def test_struve_trivial_and_oracle():
    assert bt.struve_h0(0.0).value == 0.0
    assert bt.struve_h1(0.0).value == 0.0
    assert bt.struve_h1(1.0).value == pytest.approx(H1_OVER_Z_AT_1, abs=1e-12)
    # H1(z) = 2/pi - H_(-1)(z)
    assert bt.struve_h1(2.0).value == pytest.approx(
        2 / math.pi - bt.struve_hn(-1, 2.0).value, abs=1e-13
    )


def test_struve_hn_same_function_and_recurrence():
    assert abs(bt.struve_hn(1, 1.0).value - bt.struve_h1(1.0).value) <= 1e-13
    # H0 + H2 = (2/z) H1 + (z/2) / (sqrt(pi) Gamma(5/2))
    z = 1.0
    expected = (2 / z) * bt.struve_h1(z).value - bt.struve_h0(z).value + 2 / (3 * math.pi)
    assert bt.struve_hn(2, z).value == pytest.approx(expected, abs=1e-13)


def test_struve_negative_order_value():
    assert bt.struve_hn(-1, 1.0).value == pytest.approx(
        2 / math.pi - bt.struve_h1(1.0).value, abs=1e-13
    )


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=-10, max_value=10, allow_nan=False))
def test_parity_bit_exact(z):
    assert bt.bessel_j0(z).value == bt.bessel_j0(-z).value
    assert bt.bessel_j1(z).value == -bt.bessel_j1(-z).value
    assert bt.struve_h0(z).value == -bt.struve_h0(-z).value
    assert bt.struve_h1(z).value == bt.struve_h1(-z).value


def test_representation_consistency():
    for z in (0.5, 1.0, 2.0, 5.0, 8.0):
        assert bt.bessel_j1(z).value / z == pytest.approx(
            oracle.quad_deriv_kernel("bessel", 0, z), abs=1e-11
        )
        assert bt.struve_h1(z).value / z == pytest.approx(
            oracle.quad_deriv_kernel("struve", 0, z), abs=1e-11
        )


def test_recurrence_consistency():
    for nu in range(1, 9):
        for z in (1.0, 2.0, 5.0):
            lhs = bt.bessel_jn(nu - 1, z).value + bt.bessel_jn(nu + 1, z).value
            rhs = (2 * nu / z) * bt.bessel_jn(nu, z).value
            assert abs(lhs - rhs) <= 1e-10 * max(1e-300, abs(rhs))


def test_error_estimates_nonnegative_and_small():
    for z in (0.0, 1.0, 8.0, 12.0, 30.0, 50.0):
        for fn in (bt.bessel_j0, bt.bessel_j1, bt.struve_h0, bt.struve_h1):
            res = fn(z)
            assert math.isfinite(res.value)
            assert 0 <= res.abs_err_estimate <= 1e-13


def test_domain_errors():
    with pytest.raises(DomainError):
        bt.bessel_j0(51.0)
    with pytest.raises(DomainError):
        bt.bessel_j0(math.inf)
    with pytest.raises(DomainError):
        bt.bessel_jn(65, 1.0)
    with pytest.raises(DomainError):
        bt.struve_hn(-65, 1.0)
    with pytest.raises(DomainError):
        bt.struve_hn(-2, 0.0)
    # exact value beyond the double range: rejected, not returned as inf
    with pytest.raises(DomainError):
        bt.struve_hn(-64, 1e-4)


def test_against_scipy_if_available():
    special = pytest.importorskip("scipy.special")
    for z in (0.1, 1.0, 4.0, 8.0, 13.7, 25.0, 50.0):
        assert bt.bessel_j0(z).value == pytest.approx(float(special.j0(z)), abs=1e-13)
        assert bt.bessel_j1(z).value == pytest.approx(float(special.j1(z)), abs=1e-13)
        assert bt.struve_h0(z).value == pytest.approx(float(special.struve(0, z)), abs=1e-11)
        assert bt.struve_h1(z).value == pytest.approx(float(special.struve(1, z)), abs=1e-11)
    for nu in (2, 5, 11):
        for z in (0.5, 3.0, 12.0):
            assert bt.bessel_jn(nu, z).value == pytest.approx(
                float(special.jv(nu, z)), abs=1e-12
            )
