import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from besselnu import AccuracyWarning, BesselDomainError, order_quadrature_oracle, tail_i, tail_j, tail_oracle
from besselnu.tails import _tail_j_printed, oracle_cutoff, si_limit

# mpmath quadrature over the order, 30 digits
MPMATH = [
    ("J", 0.0, 2.0, 1.2813284616741663249),
    ("J", 0.5, 1.0, 0.59673812588406516693),
    ("I", 0.0, 1.0, 1.319161500962797881),
    ("I", 1.0, 2.0, 1.6742687300120002308),
]


@pytest.mark.parametrize("kind,nu,t,ref", MPMATH)
def test_tails_against_mpmath(kind, nu, t, ref):
    fn = tail_j if kind == "J" else tail_i
    res = fn(nu, t)
    assert res.converged
    assert res.value == pytest.approx(ref, abs=1e-10)


@pytest.mark.parametrize("kind,nu,t,ref", MPMATH)
def test_oracle_against_mpmath(kind, nu, t, ref):
    assert tail_oracle(kind, nu, t) == pytest.approx(ref, abs=1e-11)


@given(nu=st.floats(0.0, 4.0), t=st.floats(0.2, 8.0))
def test_tail_j_matches_oracle(nu, t):
    assert tail_j(nu, t).value == pytest.approx(tail_oracle("J", nu, t), abs=1e-9)


@given(nu=st.floats(0.0, 4.0), t=st.floats(0.2, 8.0))
def test_tail_i_matches_oracle(nu, t):
    assert tail_i(nu, t).value == pytest.approx(tail_oracle("I", nu, t), rel=1e-10, abs=1e-9)


@given(nu=st.floats(0.0, 3.0), d=st.floats(0.1, 2.0), t=st.floats(0.3, 6.0))
def test_tail_differences_are_order_integrals(nu, d, t):
    # T(nu) - T(nu + d) = integral of J_mu(t) over (nu, nu + d)
    diff = tail_j(nu, t).value - tail_j(nu + d, t).value
    assert diff == pytest.approx(order_quadrature_oracle("J", nu, nu + d, t), abs=1e-9)


def test_far_tail_vanishes():
    assert abs(tail_j(30.0, 1.0).value) < 1e-12
    assert abs(tail_i(30.0, 1.0).value) < 1e-12


def test_unit_coefficient_variant_disagrees():
    # only the pi cos(pi nu) coefficient reproduces the oracle; at nu = 1/2 the cosine vanishes
    oracle = tail_oracle("J", 0.0, 2.0)
    assert abs(_tail_j_printed(0.0, 2.0).value - oracle) > 1e-3
    assert _tail_j_printed(0.5, 2.0).value == pytest.approx(tail_oracle("J", 0.5, 2.0), abs=1e-9)


def test_si_limit():
    assert si_limit(1.0) == pytest.approx(0.5894898722360836, rel=1e-12)  # Si(pi)/pi
    assert abs(si_limit(1e4) - 0.5) < 2e-5


@pytest.mark.parametrize("nu,t", [(0.0, 1.0), (2.5, 5.0), (10.0, 20.0)])
def test_oracle_cutoff_certifies_remainder(nu, t):
    n = oracle_cutoff(nu, t)
    assert n > nu
    bound = 10 * math.exp(n * math.log(t / 2) + t * t / 4 - math.lgamma(n + 1))
    assert bound < 1e-12


def test_oracle_warns_on_short_cutoff():
    with pytest.warns(AccuracyWarning):
        tail_oracle("J", 0.0, 2.0, N=3.0)


def test_oracle_rejects_bad_input():
    with pytest.raises(BesselDomainError):
        tail_oracle("Y", 0.0, 1.0)
    with pytest.raises(BesselDomainError):
        tail_oracle("J", 2.0, 1.0, N=1.0)
    with pytest.raises(BesselDomainError):
        tail_j(-1.0, 1.0)
    with pytest.raises(BesselDomainError):
        tail_i(1.0, 0.0)
