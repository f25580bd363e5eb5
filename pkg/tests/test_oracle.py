"""Self-consistency of the brute-force oracles."""

import math

import pytest

from besstruve import oracle
from besstruve.evaluation import DomainError
from besstruve.oracle import QuadratureRule, composite_gl, gauss_legendre_adaptive


def _integrand_s(z, zeta):
    def f(t):
        c = math.cos(t)
        s = math.sin(t)
        return c * s * s * math.sin(z * c) * math.sin(zeta * c * c)

    return f


def test_defining_trivial():
    assert oracle.quad_defining_s(3.0, 0.0) == 0.0
    assert oracle.quad_defining_s(0.0, 3.0) == 0.0
    assert oracle.quad_defining_c(0.0, 0.0) == pytest.approx(1 / 3, abs=1e-14)


def test_regression_constants():
    assert oracle.quad_defining_s(2.0, 1.0, 1e-13) == pytest.approx(
        0.11723211862393954, abs=1e-13
    )
    assert oracle.quad_defining_c(2.0, 1.0, 1e-13) == pytest.approx(
        0.11449482650904545, abs=1e-13
    )


def test_panel_doubling_stability():
    for (z, zeta) in [(2.0, 1.0), (10.0, 5.0), (50.0, 50.0)]:
        f = _integrand_s(z, zeta)
        rule = QuadratureRule(target_tol=1e-12)
        value, _, _ = gauss_legendre_adaptive(f, 0.0, math.pi / 2, rule)
        # doubling the panels once more moves the value by less than the target
        for panels in (64, 128):
            a = composite_gl(f, 0.0, math.pi / 2, panels, 32)
            b = composite_gl(f, 0.0, math.pi / 2, 2 * panels, 32)
            assert abs(a - b) < 1e-12


def test_kernel_trivial_values():
    assert oracle.quad_deriv_kernel("bessel", 0, 0.0) == pytest.approx(0.5, abs=1e-14)
    assert oracle.quad_deriv_kernel("struve", 0, 0.0) == pytest.approx(0.0, abs=1e-14)
    assert oracle.quad_deriv_kernel("bessel", 2, 0.0) == pytest.approx(-0.125, abs=1e-13)


def test_taylor_trivial_values():
    assert oracle.taylor_deriv("bessel", 0, 0.0, 50) == 0.5
    assert oracle.taylor_deriv("struve", 1, 0.0, 50) == pytest.approx(
        2 / (3 * math.pi), rel=1e-15
    )


def test_mutual_oracle_agreement():
    for k in range(0, 11):
        for z in (-1.0, -0.4, 0.0, 0.3, 0.5, 1.0):
            t = oracle.taylor_deriv("bessel", k, z, 150)
            q = oracle.quad_deriv_kernel("bessel", k, z)
            assert abs(t - q) <= 1e-11, ("bessel", k, z)
            t = oracle.taylor_deriv("struve", k, z, 150)
            q = oracle.quad_deriv_kernel("struve", k, z)
            assert abs(t - q) <= 1e-11, ("struve", k, z)


def test_taylor_matches_quadrature_at_midpoint():
    assert oracle.taylor_deriv("bessel", 3, 0.5, 150) == pytest.approx(
        oracle.quad_deriv_kernel("bessel", 3, 0.5), abs=1e-12
    )


def test_domain_checks():
    with pytest.raises(DomainError):
        oracle.quad_defining_s(1.0, 1.0, 1e-14)
    with pytest.raises(DomainError):
        oracle.quad_deriv_kernel("bessel", 61, 1.0)
    with pytest.raises(DomainError):
        oracle.quad_deriv_kernel("weird", 0, 1.0)
    with pytest.raises(DomainError):
        oracle.taylor_deriv("bessel", 1, 3.0, 50)
    with pytest.raises(DomainError):
        oracle.taylor_deriv("bessel", 1, 1.0, 500)


def test_rule_validation():
    with pytest.raises(ValueError):
        QuadratureRule(nodes_per_panel=20)
    with pytest.raises(ValueError):
        QuadratureRule(panels=0)
    with pytest.raises(ValueError):
        QuadratureRule(target_tol=0.0)
