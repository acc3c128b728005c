"""Riemann-Liouville integration of Bessel functions with respect to the order.

Every integral representation is a superposition of exponentials in ν, and
the fractional integral of an exponential is closed form:

    D^{-α}_{ν-ν₀} e^{sν} = e^{sν} s^{-α} P(α, s(ν - ν₀)).

Applying this under the integral sign gives one-dimensional integrals in
the representation variable ``x`` whose kernels involve ``P(α, z)`` at
complex ``z``.  Principal branches are used for every complex power.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .bessel import (J_SERIES_T_SAFE, SERIES_T_MAX, BesselKind, i_int, i_series, j_int, j_series, k_int,
                     y_int)
from .complexmath import c_pow_principal, gamma_reg_lower, gamma_star, gamma_upper_scaled
from .derivatives import _warn_y_overflow
from .errors import BesselDomainError, NonConvergenceError
from .quadrature import QuadConfig, QuadResult, exp_sinh, sinh_sinh, tanh_sinh

__all__ = [
    "FracRequest",
    "frac_eval",
    "frac_int_exp",
    "frac_k_imag",
    "frac_value_at_zero",
    "frac_zero_t_finite",
    "frac_zero_t_tail",
    "order_quadrature_oracle",
    "riemann_liouville_oracle",
]

# |s d| below which P(α, s d)/s^α switches to the series for z^{-α} P(α, z)
_SMALL_Z = 1e-4
# -Re(s d) above which P(α, s d) is split as 1 - Q to avoid its e^{-s d} growth
_SPLIT_RE = 50.0
_EXP_ARG_MAX = 700.0


@dataclass(frozen=True)
class FracRequest:
    """A single ``D^{-α}_{ν-ν₀} C_ν(t)`` evaluation job."""

    kind: BesselKind
    alpha: float
    nu0: float
    nu: float
    t: float
    tol: float = 1e-10

    def __post_init__(self):
        object.__setattr__(self, "kind", BesselKind.parse(self.kind))
        if not self.alpha > 0:
            raise BesselDomainError(f"fractional order must be positive, got alpha = {self.alpha}")
        if not self.nu0 >= 0:
            raise BesselDomainError(f"lower limit must be non-negative, got nu0 = {self.nu0}")
        if not self.nu > self.nu0:
            raise BesselDomainError(f"need nu > nu0, got nu = {self.nu}, nu0 = {self.nu0}")
        if not self.t >= 0:
            raise BesselDomainError(f"argument must be non-negative, got t = {self.t}")
        if self.t == 0 and self.kind in (BesselKind.Y, BesselKind.K):
            raise BesselDomainError(f"{self.kind.value} is unbounded at t = 0; use frac_value_at_zero")
        if not self.tol > 0:
            raise BesselDomainError(f"tolerance must be positive, got {self.tol}")


def _p_over_pow(alpha: float, s: complex, d: float) -> complex:
    """``P(α, s d) / s^α`` on principal branches, finite as ``s → 0``."""
    z = s * d
    if abs(z) < _SMALL_Z:
        return d**alpha * gamma_star(alpha, z)
    return gamma_reg_lower(alpha, z) / c_pow_principal(s, alpha)


def _exp_kernel(alpha: float, s: complex, nu: float, d: float, log_scale: float = 0.0) -> complex:
    """``e^{log_scale} e^{sν} P(α, s d)/s^α``, zero once the prefactor underflows.

    ``|P(α, s d)|`` grows at most like ``e^{max(0, -Re s d)}``, so the bound
    is checked before ``P`` is evaluated.
    """
    log_mag = log_scale + s.real * nu + max(0.0, -s.real * d)
    if log_mag < -745.0:
        return 0j
    if -s.real * d > _SPLIT_RE:
        # e^{sν} Q(α, sd)/s^α = d^α e^{sν₀} h / Γ(α) with h = e^{sd} (sd)^{-α} Γ(α, sd)
        nu0 = nu - d
        head = _exp_or_zero(log_scale + s * nu) / c_pow_principal(s, alpha)
        q = d**alpha * _exp_or_zero(log_scale + s * nu0) * gamma_upper_scaled(alpha, s * d)
        return head - q / math.gamma(alpha)
    return cmath.exp(log_scale + s * nu) * _p_over_pow(alpha, s, d)


def _exp_or_zero(w: complex) -> complex:
    return cmath.exp(w) if w.real > -745.0 else 0j


def frac_int_exp(alpha: float, s, nu0: float, nu: float) -> complex:
    """Fractional integral of order ``α`` of ``e^{sν}`` from ``ν₀``.

    Parameters
    ----------
    alpha : float
        Order, ``α > 0``.
    s : complex
        Exponent, ``s != 0``.
    nu0, nu : float
        Lower limit and evaluation point.

    Returns
    -------
    complex
        ``e^{sν} s^{-α} P(α, s(ν - ν₀))``.

    Examples
    --------
    >>> round(frac_int_exp(2.0, 1.0, 0.0, 1.0).real, 12)
    0.718281828459
    """
    if not alpha > 0:
        raise BesselDomainError(f"alpha must be positive, got {alpha}")
    s = complex(s)
    if s == 0:
        raise BesselDomainError("exponent s must be non-zero")
    return _exp_kernel(alpha, s, nu, nu - nu0)


def riemann_liouville_oracle(f: Callable[[float], float], alpha: float, nu0: float, nu: float,
                             tol: float = 1e-12) -> float:
    """Brute-force ``(1/Γ(α)) ∫_{ν₀}^{ν} (ν - u)^{α-1} f(u) du``.

    The kernel is formed from the exact distance to the upper limit, so the
    ``α < 1`` endpoint singularity costs no precision.
    """
    if not alpha > 0:
        raise BesselDomainError(f"alpha must be positive, got {alpha}")
    if not nu > nu0:
        raise BesselDomainError(f"need nu > nu0, got ({nu0}, {nu})")
    a1 = alpha - 1.0
    res = tanh_sinh(lambda u, du, w: w**a1 * f(u), nu0, nu, QuadConfig(tol=tol),
                    endpoint_distances=True)
    if not res.converged:
        raise NonConvergenceError(f"Riemann-Liouville oracle did not converge (err={res.err_est:.3g})")
    return res.value / math.gamma(alpha)


def _base(kind: BesselKind, t: float) -> Callable[[float], float]:
    if kind is BesselKind.J:
        return (lambda mu: j_series(mu, t)) if t <= J_SERIES_T_SAFE else (lambda mu: j_int(mu, t))
    if kind is BesselKind.I:
        return (lambda mu: i_series(mu, t)) if t <= SERIES_T_MAX else (lambda mu: i_int(mu, t))
    if kind is BesselKind.Y:
        return lambda mu: y_int(mu, t)
    return lambda mu: k_int(mu, t)


def order_quadrature_oracle(kind, nu0: float, nu: float, t: float, tol: float = 1e-10) -> float:
    """``∫_{ν₀}^{ν} C_μ(t) dμ`` by tanh-sinh over the order."""
    kind = BesselKind.parse(kind)
    res = tanh_sinh(_base(kind, t), nu0, nu, QuadConfig(tol=tol))
    if not res.converged:
        raise NonConvergenceError(f"order quadrature did not converge (err={res.err_est:.3g})")
    return res.value


def frac_value_at_zero(kind, alpha: float, nu0: float, nu: float) -> float:
    """Limit of ``D^{-α} C_ν(t)`` as ``t → 0⁺``: 0 for J and I, ``-inf`` for Y, ``+inf`` for K."""
    if not alpha > 0:
        raise BesselDomainError(f"alpha must be positive, got {alpha}")
    kind = BesselKind.parse(kind)
    if kind is BesselKind.Y:
        return -math.inf
    if kind is BesselKind.K:
        return math.inf
    return 0.0


def _tail_kernel(alpha, nu, d, log_damp, x) -> complex:
    # e^{log_damp} e^{(iπ-x)ν} P(α, (iπ-x)d) / (iπ-x)^α
    return _exp_kernel(alpha, complex(-x, math.pi), nu, d, log_damp)


def _finite_kernel(alpha, nu, d, x, sign=-1.0) -> complex:
    # e^{sν} P(α, s d)/s^α at s = ±ix; J and Y use s = -ix, I uses s = +ix
    return _exp_kernel(alpha, complex(0.0, sign * x), nu, d)


def _k_kernel(alpha, nu, d, t, x) -> complex:
    if abs(x) > _EXP_ARG_MAX:
        return 0j
    return 0.5 * _exp_kernel(alpha, complex(x, 0.0), nu, d, -t * math.cosh(x))


def frac_k_imag(alpha: float, nu0: float, nu: float, t: float, tol: float = 1e-10) -> QuadResult:
    """Integral of the imaginary part discarded by :func:`frac_eval` for K.

    The integrand ``x^{-α} e^{νx - t cosh x} P(α, x(ν - ν₀))`` is formed with
    principal-branch powers on the whole real line.  Its imaginary part
    cancels analytically for ``x < 0``; this returns what is left numerically.
    """
    d = nu - nu0
    return sinh_sinh(lambda x: _k_kernel(alpha, nu, d, t, x).imag, QuadConfig(tol=tol))


def frac_eval(req: FracRequest) -> QuadResult:
    """Evaluate ``D^{-α}_{ν-ν₀} C_ν(t)`` for ``C`` in {J, Y, I, K}.

    J, Y and I combine a tanh-sinh integral over (0, π) with an exp-sinh
    integral over (0, ∞), each at ``tol/2``; K is a single sinh-sinh
    integral of which the real part is kept.  At ``t = 0`` the J and I
    limits (zero) are returned exactly.
    """
    kind, alpha, nu, t = req.kind, req.alpha, req.nu, req.t
    d = nu - req.nu0
    if t == 0:
        return QuadResult(0.0, 0.0, 0, True, 0)
    if kind is BesselKind.K:
        return sinh_sinh(lambda x: _k_kernel(alpha, nu, d, t, x).real, QuadConfig(tol=req.tol))

    cfg = QuadConfig(tol=0.5 * req.tol)

    def damping(x):
        return -t * (math.cosh(x) if kind is BesselKind.I else math.sinh(x))

    def tail_im(x):
        if x > _EXP_ARG_MAX:
            return 0.0
        return _tail_kernel(alpha, nu, d, damping(x), x).imag

    if kind is BesselKind.J:
        finite = tanh_sinh(
            lambda x: (cmath.exp(1j * t * math.sin(x)) * _finite_kernel(alpha, nu, d, x)).real,
            0.0, math.pi, cfg)
        tail = exp_sinh(tail_im, 0.0, cfg)
    elif kind is BesselKind.I:
        finite = tanh_sinh(
            lambda x: math.exp(t * math.cos(x)) * _finite_kernel(alpha, nu, d, x, sign=1.0).real,
            0.0, math.pi, cfg)
        tail = exp_sinh(tail_im, 0.0, cfg)
    else:
        _warn_y_overflow(0, nu, t)
        finite = tanh_sinh(
            lambda x: (cmath.exp(1j * t * math.sin(x)) * _finite_kernel(alpha, nu, d, x)).imag,
            0.0, math.pi, cfg)

        def tail_y(x):
            if x > _EXP_ARG_MAX:
                return 0.0
            log_damp = damping(x)
            real_axis = _exp_kernel(alpha, complex(x, 0.0), nu, d, log_damp).real
            return real_axis + _tail_kernel(alpha, nu, d, log_damp, x).real

        tail = exp_sinh(tail_y, 0.0, cfg)
    return (finite - tail).scaled(1.0 / math.pi)


def frac_zero_t_tail(alpha: float, nu0: float, nu: float, tol: float = 1e-11) -> QuadResult:
    """``Im ∫_0^∞ e^{(iπ-x)ν} P(α, (iπ-x)(ν-ν₀)) / (iπ-x)^α dx``, the undamped J/I tail at t = 0.

    The integrand decays like ``e^{-ν₀ x}``, so ``ν₀ > 0`` is required; at
    ``ν₀ = 0`` the decay is only algebraic and ``P`` overflows long before
    the tail is negligible.
    """
    if not nu0 > 0:
        raise BesselDomainError(f"the undamped tail needs nu0 > 0, got {nu0}")
    d = nu - nu0
    return exp_sinh(lambda x: 0.0 if x > _EXP_ARG_MAX else _tail_kernel(alpha, nu, d, 0.0, x).imag,
                    0.0, QuadConfig(tol=tol))


def frac_zero_t_finite(alpha: float, nu0: float, nu: float, sign: float = 1.0,
                       tol: float = 1e-11) -> QuadResult:
    """``Re ∫_0^π e^{±iνx} P(α, ±ix(ν-ν₀)) / (±ix)^α dx``; ``sign`` picks the branch of ±.

    Both choices give the same value because ``P(a, z̄)`` is the conjugate of
    ``P(a, z)`` for real ``a``.  At t = 0 this equals :func:`frac_zero_t_tail`,
    which makes the J and I integrals vanish.
    """
    d = nu - nu0
    return tanh_sinh(lambda x: _finite_kernel(alpha, nu, d, x, sign).real, 0.0, math.pi,
                     QuadConfig(tol=tol))
