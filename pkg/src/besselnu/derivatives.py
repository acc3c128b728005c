"""Derivatives of J, Y, I and K with respect to the order.

The n-th order derivative is obtained by differentiating the integral
representations under the integral sign.  The finite part over (0, π)
becomes ``x^n`` times a phase-shifted trigonometric kernel, and the
exponentially damped part picks up ``(iπ - x)^n`` from
``d/dν e^{(iπ - x)ν}``.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .bessel import BesselKind, i_series, j_series, k0, y0
from .complexmath import digamma, rgamma
from .errors import BesselDomainError, OverflowRiskWarning
from .quadrature import QuadConfig, QuadResult, exp_sinh, sinh_sinh, tanh_sinh

__all__ = [
    "MAX_ORDER",
    "DerivRequest",
    "deriv",
    "di_dnu_apelblat",
    "di_dnu_series",
    "dj_dnu_apelblat",
    "dj_dnu_series",
    "kernel_f1",
    "kernel_f2",
    "kernel_f3",
    "kernel_f4",
    "value_at_zero",
    "zero_t_finite",
    "zero_t_tail",
]

MAX_ORDER = 12
_EXP_ARG_MAX = 700.0
# log(1e300): larger integrand peaks risk overflow in the Y tail
_PEAK_LOG_LIMIT = 690.0


def _ipi_minus_x_pow(n: int, x: float) -> complex:
    z = complex(-x, math.pi)
    acc = 1.0 + 0j
    for _ in range(n):
        acc *= z
    return acc


def kernel_f1(n: int, x: float, nu: float, t: float) -> float:
    """``x^n cos(t sin x - νx - nπ/2)``."""
    return x**n * math.cos(t * math.sin(x) - nu * x - 0.5 * n * math.pi)


def kernel_f2(n: int, x: float, nu: float, t: float) -> float:
    """``x^n sin(t sin x - νx - nπ/2)``."""
    return x**n * math.sin(t * math.sin(x) - nu * x - 0.5 * n * math.pi)


def _f34(n: int, x: float, nu: float) -> complex:
    return math.exp(-nu * x) * _ipi_minus_x_pow(n, x) * cmath.exp(1j * math.pi * nu)


def kernel_f3(n: int, x: float, nu: float) -> float:
    """``e^{-νx} Im[(iπ - x)^n e^{iπν}]``, the n-th ν-derivative of ``e^{-νx} sin πν``."""
    return _f34(n, x, nu).imag


def kernel_f4(n: int, x: float, nu: float) -> float:
    """``e^{-νx} Re[(iπ - x)^n e^{iπν}]``, the n-th ν-derivative of ``e^{-νx} cos πν``."""
    return _f34(n, x, nu).real


@dataclass(frozen=True)
class DerivRequest:
    """A single ``∂ⁿ/∂νⁿ C_ν(t)`` evaluation job."""

    kind: BesselKind
    n: int
    nu: float
    t: float
    tol: float = 1e-10

    def __post_init__(self):
        object.__setattr__(self, "kind", BesselKind.parse(self.kind))
        if not (isinstance(self.n, int) and self.n >= 0):
            raise BesselDomainError(f"derivative order must be a non-negative integer, got {self.n!r}")
        if self.n > MAX_ORDER:
            raise BesselDomainError(f"derivative order {self.n} exceeds the supported maximum {MAX_ORDER}")
        if not self.nu >= 0:
            raise BesselDomainError(f"order must be non-negative, got {self.nu}")
        if not self.t >= 0:
            raise BesselDomainError(f"argument must be non-negative, got {self.t}")
        if self.t == 0 and self.kind in (BesselKind.Y, BesselKind.K):
            raise BesselDomainError(f"{self.kind.value} is unbounded at t = 0; use value_at_zero")
        if not self.tol > 0:
            raise BesselDomainError(f"tolerance must be positive, got {self.tol}")


def value_at_zero(kind, n: int, nu: float) -> float:
    """Limit of ``∂ⁿ/∂νⁿ C_ν(t)`` as ``t → 0⁺``.

    J and I vanish for ``n >= 1`` (and for ``n = 0`` unless ``ν = 0``);
    the irregular solutions diverge, Y to ``-inf`` and K to ``+inf``.
    """
    kind = BesselKind.parse(kind)
    if kind is BesselKind.Y:
        return -math.inf
    if kind is BesselKind.K:
        return math.inf
    if n == 0 and nu == 0:
        return 1.0
    return 0.0


def _log_xn(n: int, x: float) -> float:
    return n * math.log(x) if n else 0.0


def _guarded_exp(expo: float) -> float:
    return math.exp(expo) if expo > -745.0 else 0.0


def _y_tail_peak(n: int, nu: float, t: float) -> float:
    # maximum over x of n log x + νx - t sinh x, located where n/x + ν = t cosh x
    lo, hi = 1e-12, 1.0
    while hi < _EXP_ARG_MAX and n / hi + nu > t * math.cosh(hi):
        hi = min(2.0 * hi, _EXP_ARG_MAX)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if n / mid + nu > t * math.cosh(mid):
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    return _log_xn(n, x) + nu * x - t * math.sinh(x)


def _warn_y_overflow(n: int, nu: float, t: float):
    peak = _y_tail_peak(n, nu, t)
    if peak > _PEAK_LOG_LIMIT:
        warnings.warn(f"Y tail integrand peaks near e^{peak:.0f} at (n={n}, nu={nu}, t={t}); "
                      "overflow is likely", OverflowRiskWarning, stacklevel=3)


def _j_pieces(n, nu, t, cfg):
    finite = tanh_sinh(lambda x: kernel_f1(n, x, nu, t), 0.0, math.pi, cfg)

    def tail(x):
        if x > _EXP_ARG_MAX:
            return 0.0
        return _guarded_exp(-t * math.sinh(x)) * kernel_f3(n, x, nu)

    return finite, exp_sinh(tail, 0.0, cfg)


def _i_pieces(n, nu, t, cfg):
    shift = 0.5 * n * math.pi
    finite = tanh_sinh(lambda x: x**n * math.exp(t * math.cos(x)) * math.cos(nu * x + shift),
                       0.0, math.pi, cfg)

    def tail(x):
        if x > _EXP_ARG_MAX:
            return 0.0
        return _guarded_exp(-t * math.cosh(x)) * kernel_f3(n, x, nu)

    return finite, exp_sinh(tail, 0.0, cfg)


def _y_pieces(n, nu, t, cfg):
    _warn_y_overflow(n, nu, t)
    finite = tanh_sinh(lambda x: kernel_f2(n, x, nu, t), 0.0, math.pi, cfg)

    def tail(x):
        if x > _EXP_ARG_MAX:
            return 0.0
        sh = t * math.sinh(x)
        growing = _guarded_exp(_log_xn(n, x) + nu * x - sh)
        return growing + _guarded_exp(-sh) * kernel_f4(n, x, nu)

    return finite, exp_sinh(tail, 0.0, cfg)


def deriv(req: DerivRequest) -> QuadResult:
    """Evaluate ``∂ⁿ/∂νⁿ C_ν(t)`` for ``C`` in {J, Y, I, K}.

    J, Y and I are the difference of a tanh-sinh integral over (0, π) and
    an exp-sinh integral over (0, ∞), each run at ``tol/2``; K is a single
    sinh-sinh integral over the real line.  ``err_est`` is the sum of the
    piece estimates.  At ``t = 0`` the J and I limits are returned exactly
    with ``n_evals = 0``.

    Examples
    --------
    >>> r = deriv(DerivRequest("K", 0, 0.5, 1.0))
    >>> round(r.value, 12)
    0.461068504448
    """
    kind, n, nu, t = req.kind, req.n, req.nu, req.t
    if t == 0:
        return QuadResult(value_at_zero(kind, n, nu), 0.0, 0, True, 0)
    if kind is BesselKind.K:
        def integrand(x):
            if abs(x) > _EXP_ARG_MAX:
                return 0.0
            return x**n * _guarded_exp(nu * x - t * math.cosh(x))

        return sinh_sinh(integrand, QuadConfig(tol=req.tol)).scaled(0.5)
    cfg = QuadConfig(tol=0.5 * req.tol)
    pieces = {BesselKind.J: _j_pieces, BesselKind.I: _i_pieces, BesselKind.Y: _y_pieces}[kind]
    finite, tail = pieces(n, nu, t, cfg)
    return (finite - tail).scaled(1.0 / math.pi)


def _psi_series(nu: float, t: float, sign: float) -> float:
    # (t/2)^ν Σ sign^k ψ(ν+k+1) (t/2)^{2k} / (k! Γ(ν+k+1))
    half = 0.5 * t
    q = sign * half * half
    coeff = rgamma(nu + 1.0)
    parts = [coeff * digamma(nu + 1.0)]
    for k in range(1, 200):
        coeff *= q / (k * (nu + k))
        term = coeff * digamma(nu + k + 1.0)
        parts.append(term)
        if k * (k + nu) > abs(q) and abs(term) < 1e-17 * abs(math.fsum(parts)):
            break
    return half**nu * math.fsum(parts)


def dj_dnu_series(nu: float, t: float) -> float:
    """``∂J_ν(t)/∂ν`` from the term-wise derivative of the power series.

    ``J_ν log(t/2) - (t/2)^ν Σ (-1)^k ψ(ν+k+1) (t/2)^{2k} / (k! Γ(ν+k+1))``.
    Returns the limit 0 at ``t = 0``.  Cancellation limits the absolute
    accuracy to about ``1e-14`` at ``t = 10`` and ``1e-8`` at ``t = 25``.
    """
    if not nu >= 0:
        raise BesselDomainError(f"order must be non-negative, got {nu}")
    if t == 0:
        return 0.0
    return j_series(nu, t) * math.log(0.5 * t) - _psi_series(nu, t, -1.0)


def di_dnu_series(nu: float, t: float) -> float:
    """``∂I_ν(t)/∂ν``, the all-positive analogue of :func:`dj_dnu_series`."""
    if not nu >= 0:
        raise BesselDomainError(f"order must be non-negative, got {nu}")
    if t == 0:
        return 0.0
    return i_series(nu, t) * math.log(0.5 * t) - _psi_series(nu, t, 1.0)


_APELBLAT_CFG = QuadConfig(tol=1e-11)


def _apelblat(nu: float, t: float, second, first, cfg: QuadConfig) -> float:
    if not nu >= 0 or not t > 0:
        raise BesselDomainError(f"needs nu >= 0 and t > 0, got nu={nu}, t={t}")
    if nu == 0:
        return 0.0

    def integrand(theta, da, db):
        # sin θ and cos θ from the endpoint distances keep full relative precision
        s, c = math.sin(da), math.sin(db)
        arg = t * s * s
        if arg == 0.0 or c == 0.0:
            return 0.0
        return s / c * second(arg) * first(nu, t * c * c)

    res = tanh_sinh(integrand, 0.0, 0.5 * math.pi, cfg, endpoint_distances=True)
    return res.value


def dj_dnu_apelblat(nu: float, t: float, cfg: QuadConfig = _APELBLAT_CFG) -> float:
    """``∂J_ν(t)/∂ν = πν ∫_0^{π/2} tan θ Y_0(t sin²θ) J_ν(t cos²θ) dθ``."""
    return math.pi * nu * _apelblat(nu, t, y0, j_series, cfg)


def di_dnu_apelblat(nu: float, t: float, cfg: QuadConfig = _APELBLAT_CFG) -> float:
    """``∂I_ν(t)/∂ν = -2ν ∫_0^{π/2} tan θ K_0(t sin²θ) I_ν(t cos²θ) dθ``."""
    return -2.0 * nu * _apelblat(nu, t, k0, i_series, cfg)


def zero_t_tail(n: int, nu: float, tol: float = 1e-12) -> QuadResult:
    """``Im ∫_0^∞ (iπ - x)^n e^{(iπ - x)ν} dx``, the undamped tail at t = 0."""
    if not nu > 0:
        raise BesselDomainError(f"the undamped tail needs nu > 0, got {nu}")

    def integrand(x):
        if x > _EXP_ARG_MAX:
            return 0.0
        return kernel_f3(n, x, nu)

    return exp_sinh(integrand, 0.0, QuadConfig(tol=tol))


def zero_t_finite(n: int, nu: float, tol: float = 1e-12) -> QuadResult:
    """``Re ∫_0^π (ix)^n e^{iνx} dx``; equal to :func:`zero_t_tail`, so J and I derivatives vanish at t = 0."""
    return tanh_sinh(lambda x: kernel_f1(n, x, nu, 0.0), 0.0, math.pi, QuadConfig(tol=tol))
