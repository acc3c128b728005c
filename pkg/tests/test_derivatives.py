import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from besselnu import (BesselDomainError, DerivRequest, OverflowRiskWarning, QuadratureError, bessel, deriv,
                      di_dnu_apelblat, di_dnu_series, dj_dnu_apelblat, dj_dnu_series, kernel_f3, kernel_f4,
                      value_at_zero)
from besselnu.derivatives import MAX_ORDER, zero_t_finite, zero_t_tail
from besselnu.finite_diff import order_derivative_fd

# mpmath.diff of besselj/bessely/besseli/besselk in the order, 30 digits
MPMATH = [
    ("J", 1, 0.5, 2.0, 0.34047508704076957474),
    ("I", 1, 0.5, 2.0, -0.75733306178603619982),
    ("J", 3, 5.0, 5.0, 0.10224970842615118721),
    ("Y", 2, 0.7, 1.3, 0.55229857260389186225),
    ("K", 1, 1.0, 2.0, 0.056946936374766717826),
    ("I", 4, 2.0, 5.0, -1.8273352184891190948),
    ("K", 3, 0.3, 0.8, 0.34528631701877658956),
]

KINDS = ["J", "Y", "I", "K"]


@pytest.mark.parametrize("kind,n,nu,t,ref", MPMATH)
def test_deriv_against_mpmath(kind, n, nu, t, ref):
    res = deriv(DerivRequest(kind, n, nu, t, tol=1e-12))
    assert res.converged
    assert res.value == pytest.approx(ref, rel=1e-10)


def test_kernels_against_mpmath():
    assert kernel_f3(3, 0.7, 0.4) == pytest.approx(8.4883308597987277444, rel=1e-14)
    assert kernel_f4(2, 1.1, 0.3) == pytest.approx(0.36056635205105354635, rel=1e-14)


@pytest.mark.parametrize("kind", KINDS)
@given(nu=st.floats(0.0, 6.0), t=st.floats(0.2, 10.0))
def test_order_zero_reproduces_function(kind, nu, t):
    value = deriv(DerivRequest(kind, 0, nu, t)).value
    assert value == pytest.approx(bessel(kind, nu, t), rel=1e-9, abs=1e-11)


@given(nu=st.floats(1.0, 6.0), t=st.floats(0.3, 10.0))
def test_first_derivative_of_recurrence(nu, t):
    # d/dν of J_{ν-1} + J_{ν+1} = (2ν/t) J_ν
    d = lambda m: deriv(DerivRequest("J", 1, m, t, tol=1e-12)).value  # noqa: E731
    lhs = d(nu - 1) + d(nu + 1)
    rhs = 2 / t * bessel("J", nu, t) + 2 * nu / t * d(nu)
    assert abs(lhs - rhs) <= 1e-9 * (1 + 2 * nu / t)


@given(n=st.integers(0, 6).map(lambda k: 2 * k), nu=st.floats(0.0, 8.0), t=st.floats(0.1, 20.0))
def test_even_k_derivatives_are_positive(n, nu, t):
    assert deriv(DerivRequest("K", n, nu, t)).value > 0


@pytest.mark.parametrize("n", [1, 3, 5])
def test_odd_k_derivatives_vanish_at_order_zero(n):
    # the sinh-sinh nodes are symmetric, so the odd integrand cancels exactly
    assert deriv(DerivRequest("K", n, 0.0, 1.5)).value == 0.0


@given(nu=st.floats(0.0, 6.0), t=st.floats(0.2, 10.0))
def test_first_derivative_matches_series(nu, t):
    assert deriv(DerivRequest("J", 1, nu, t, 1e-12)).value == pytest.approx(dj_dnu_series(nu, t), abs=1e-11)
    assert deriv(DerivRequest("I", 1, nu, t, 1e-12)).value == pytest.approx(di_dnu_series(nu, t), rel=1e-10,
                                                                          abs=1e-11)


@pytest.mark.parametrize("nu,t", [(1.0, 1.0), (2.0, 3.0), (3.0, 0.5)])
def test_apelblat_integer_order(nu, t):
    assert dj_dnu_apelblat(nu, t) == pytest.approx(deriv(DerivRequest("J", 1, nu, t, 1e-12)).value, abs=1e-9)
    assert di_dnu_apelblat(nu, t) == pytest.approx(deriv(DerivRequest("I", 1, nu, t, 1e-12)).value, rel=1e-9)


def test_apelblat_mpmath_values():
    assert dj_dnu_apelblat(1.0, 1.0) == pytest.approx(-0.46192854358560493779, rel=1e-10)
    assert di_dnu_apelblat(2.0, 3.0) == pytest.approx(-1.6124700287701429496, rel=1e-10)


@pytest.mark.parametrize("kind", ["Y", "K"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_irregular_kinds_against_finite_differences(kind, n):
    value = deriv(DerivRequest(kind, n, 1.3, 2.0)).value
    assert value == pytest.approx(order_derivative_fd(kind, n, 1.3, 2.0).value, rel=1e-6)


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("nu", [0.5, 1.5, 2.25])
def test_zero_t_identity(n, nu):
    assert zero_t_tail(n, nu).value == pytest.approx(zero_t_finite(n, nu).value, abs=1e-10)


def test_zero_t_tail_needs_positive_order():
    with pytest.raises(BesselDomainError):
        zero_t_tail(1, 0.0)


@pytest.mark.parametrize("kind,n,nu,expected", [("J", 0, 0.0, 1.0), ("J", 0, 1.0, 0.0), ("I", 2, 0.5, 0.0),
                                                ("Y", 1, 0.5, -math.inf), ("K", 0, 2.0, math.inf)])
def test_value_at_zero(kind, n, nu, expected):
    assert value_at_zero(kind, n, nu) == expected


def test_deriv_at_zero_returns_limit():
    res = deriv(DerivRequest("J", 2, 1.0, 0.0))
    assert (res.value, res.n_evals, res.converged) == (0.0, 0, True)


@pytest.mark.parametrize("kwargs", [
    dict(kind="Y", n=1, nu=1.0, t=0.0),
    dict(kind="K", n=1, nu=1.0, t=0.0),
    dict(kind="J", n=-1, nu=1.0, t=1.0),
    dict(kind="J", n=1.0, nu=1.0, t=1.0),
    dict(kind="J", n=MAX_ORDER + 1, nu=1.0, t=1.0),
    dict(kind="J", n=1, nu=-0.5, t=1.0),
    dict(kind="J", n=1, nu=1.0, t=-1.0),
    dict(kind="J", n=1, nu=1.0, t=1.0, tol=0.0),
    dict(kind="H", n=1, nu=1.0, t=1.0),
])
def test_request_validation(kwargs):
    with pytest.raises(BesselDomainError):
        DerivRequest(**kwargs)


def test_y_overflow_warning():
    # the value itself is far beyond double range, so the warning precedes the failure
    with pytest.warns(OverflowRiskWarning), pytest.raises(QuadratureError):
        deriv(DerivRequest("Y", 4, 400.0, 0.01))


def test_no_overflow_warning_in_normal_range(recwarn):
    deriv(DerivRequest("Y", 4, 9.5, 0.1))
    assert not [w for w in recwarn if issubclass(w.category, OverflowRiskWarning)]


@pytest.mark.parametrize("kind", KINDS)
def test_evaluation_budget(kind):
    for n in range(1, 5):
        res = deriv(DerivRequest(kind, n, 2.5, 3.0))
        assert res.converged
        assert res.n_evals <= 4000
