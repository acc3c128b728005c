"""Integrals of J and I over the order from ν to infinity.

Integrating the integral representations over the order and exchanging
the integrations gives

    ∫_ν^∞ J_μ(t) dμ = 1/2 + (1/π) ∫_0^π sin(t sin x - νx) dx/x
                      - (1/π) ∫_0^∞ e^{-t sinh x - νx} (π cos πν + x sin πν)/(π² + x²) dx,

    ∫_ν^∞ I_μ(t) dμ = e^t/2 - (1/π) ∫_0^π e^{t cos x} sin(νx) dx/x
                      - (1/π) ∫_0^∞ e^{-t cosh x - νx} (π cos πν + x sin πν)/(π² + x²) dx.

The constant terms come from ``lim_{b→∞} Si(bπ)/π = 1/2``.
"""

from __future__ import annotations

import math
import warnings

from .bessel import BesselKind, J_SERIES_T_SAFE, SERIES_T_MAX, i_int, i_series, j_int, j_series
from .complexmath import cospi, sinpi
from .errors import AccuracyWarning, BesselDomainError, NonConvergenceError
from .quadrature import QuadConfig, QuadResult, exp_sinh, tanh_sinh

__all__ = ["oracle_cutoff", "si_limit", "tail_i", "tail_j", "tail_oracle"]

# below this x the removable singularities use two-term Taylor expansions
_SMALL_X = 1e-6
_EXP_ARG_MAX = 700.0
_ORACLE_SAFETY = 10.0
_ORACLE_BOUND = 1e-12


def _require(nu: float, t: float):
    if not nu >= 0:
        raise BesselDomainError(f"order must be non-negative, got {nu}")
    if not t > 0:
        raise BesselDomainError(f"argument must be positive, got {t}")


def _plus_constant(res: QuadResult, c: float) -> QuadResult:
    return QuadResult(res.value + c, res.err_est, res.n_evals, res.converged, res.level_used)


def _damped_tail(nu: float, t: float, hyperbolic, cos_coeff: float, cfg: QuadConfig) -> QuadResult:
    s, c = sinpi(nu), cospi(nu)

    def integrand(x):
        if x > _EXP_ARG_MAX:
            return 0.0
        expo = -t * hyperbolic(x) - nu * x
        if expo < -745.0:
            return 0.0
        return math.exp(expo) * (cos_coeff * c + x * s) / (math.pi**2 + x * x)

    return exp_sinh(integrand, 0.0, cfg)


def _sinc_shift(nu: float, t: float):
    # sin(t sin x - νx)/x, which tends to t - ν at x = 0
    slope = t - nu

    def f(x):
        if x < _SMALL_X:
            return slope - (t + slope**3) * x * x / 6.0
        return math.sin(t * math.sin(x) - nu * x) / x

    return f


def _tail_j(nu: float, t: float, tol: float, cos_coeff: float) -> QuadResult:
    _require(nu, t)
    cfg = QuadConfig(tol=0.5 * tol)
    finite = tanh_sinh(_sinc_shift(nu, t), 0.0, math.pi, cfg)
    tail = _damped_tail(nu, t, math.sinh, cos_coeff, cfg)
    return _plus_constant((finite - tail).scaled(1.0 / math.pi), 0.5)


def tail_j(nu: float, t: float, tol: float = 1e-10) -> QuadResult:
    """``∫_ν^∞ J_μ(t) dμ`` for ``ν >= 0`` and ``t > 0``.

    Examples
    --------
    >>> abs(tail_j(40.0, 1.0).value) < 1e-12
    True
    """
    return _tail_j(nu, t, tol, math.pi)


def _tail_j_printed(nu: float, t: float, tol: float = 1e-10) -> QuadResult:
    # variant with coefficient 1 on cos πν, kept only to show that it disagrees with the oracle
    return _tail_j(nu, t, tol, 1.0)


def tail_i(nu: float, t: float, tol: float = 1e-10) -> QuadResult:
    """``∫_ν^∞ I_μ(t) dμ`` for ``ν >= 0`` and ``t > 0``."""
    _require(nu, t)
    cfg = QuadConfig(tol=0.5 * tol)

    def f(x):
        if x < _SMALL_X:
            sinc = nu - nu**3 * x * x / 6.0
        else:
            sinc = math.sin(nu * x) / x
        return math.exp(t * math.cos(x)) * sinc

    finite = tanh_sinh(f, 0.0, math.pi, cfg)
    tail = _damped_tail(nu, t, math.cosh, math.pi, cfg)
    return _plus_constant((finite + tail).scaled(-1.0 / math.pi), 0.5 * math.exp(t))


def _remainder_bound(t: float, n: float) -> float:
    # both |J_μ(t)| and I_μ(t) are at most (t/2)^μ e^{t²/4} / Γ(μ+1)
    return _ORACLE_SAFETY * math.exp(n * math.log(0.5 * t) + 0.25 * t * t - math.lgamma(n + 1.0))


def oracle_cutoff(nu: float, t: float) -> int:
    """Smallest integer ``N > ν`` whose truncation bound is below 1e-12."""
    n = max(int(math.floor(nu)) + 1, 1)
    while _remainder_bound(t, n) >= _ORACLE_BOUND:
        n += 1
    return n


def tail_oracle(kind, nu: float, t: float, N: float | None = None, tol: float = 1e-12) -> float:
    """Brute-force ``∫_ν^N C_μ(t) dμ`` as a stand-in for the integral to infinity.

    Parameters
    ----------
    kind : BesselKind or str
        ``J`` or ``I``.
    nu, t : float
        Lower limit and argument.
    N : float, optional
        Truncation point; chosen by :func:`oracle_cutoff` when omitted.
    tol : float
        Quadrature tolerance over the order.

    Warns
    -----
    AccuracyWarning
        If the supplied ``N`` does not certify a remainder below 1e-12.
    """
    kind = BesselKind.parse(kind)
    if kind not in (BesselKind.J, BesselKind.I):
        raise BesselDomainError(f"tail oracle is defined for J and I, got {kind.value}")
    _require(nu, t)
    if N is None:
        N = oracle_cutoff(nu, t)
    if not N > nu:
        raise BesselDomainError(f"truncation point N = {N} must exceed nu = {nu}")
    bound = _remainder_bound(t, N)
    if bound >= _ORACLE_BOUND:
        warnings.warn(f"truncation at N = {N} only bounds the remainder by {bound:.2g}",
                      AccuracyWarning, stacklevel=2)
    if kind is BesselKind.J:
        f = (lambda mu: j_series(mu, t)) if t <= J_SERIES_T_SAFE else (lambda mu: j_int(mu, t))
    else:
        f = (lambda mu: i_series(mu, t)) if t <= SERIES_T_MAX else (lambda mu: i_int(mu, t))
    res = tanh_sinh(f, nu, N, QuadConfig(tol=tol))
    if not res.converged:
        raise NonConvergenceError(f"tail oracle did not converge (err={res.err_est:.3g})")
    return res.value


def si_limit(b: float, tol: float = 1e-12) -> float:
    """``(1/π) ∫_0^π sin(bx)/x dx = Si(bπ)/π``, summed panel by panel over half-periods."""
    if not b > 0:
        raise BesselDomainError(f"b must be positive, got {b}")
    cfg = QuadConfig(tol=tol)
    panels = max(int(math.ceil(b)), 1)
    width = math.pi / panels
    parts = []
    for k in range(panels):
        lo = k * width
        res = tanh_sinh(lambda u: math.sin(u) / u if u > 0 else 1.0, b * lo, b * (lo + width), cfg)
        parts.append(res.value)
    return math.fsum(parts) / math.pi
