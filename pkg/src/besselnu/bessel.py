"""Baseline evaluators for J, Y, I and K of real order and real argument.

Two independent routes are provided for every family:

* power series (``j_series``, ``i_series``) and the quotient definitions
  built on them (``y_combo``, ``k_combo``), valid for non-integer order;
* integral representations evaluated with the DE rules (``j_int``,
  ``y_int``, ``i_int``, ``k_int``), valid for every order and ``t > 0``.

They serve as oracles for the order-derivative and order-integral modules.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

from .complexmath import EULER_GAMMA, cospi, rgamma, sinpi
from .errors import AccuracyWarning, BesselDomainError, NonConvergenceError
from .quadrature import QuadConfig, QuadResult, exp_sinh, sinh_sinh, tanh_sinh

__all__ = [
    "BesselKind",
    "EvalPoint",
    "bessel",
    "i_int",
    "i_series",
    "j_int",
    "j_series",
    "k0",
    "k_combo",
    "k_int",
    "y0",
    "y_combo",
    "y_int",
]

SERIES_T_MAX = 30.0
# the alternating J series loses ~e^t * eps to cancellation (1e-5 absolute at t = 30);
# routers switch J to the integral form above this argument
J_SERIES_T_SAFE = 12.0
INTEGRAL_CFG = QuadConfig(tol=1e-12)
_EXP_ARG_MAX = 700.0
_NEAR_INTEGER = 1e-3


class BesselKind(str, enum.Enum):
    J = "J"
    Y = "Y"
    I = "I"  # noqa: E741
    K = "K"

    @classmethod
    def parse(cls, tag) -> "BesselKind":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).upper())
        except ValueError:
            raise BesselDomainError(f"unknown kind {tag!r}; expected one of J, Y, I, K") from None


@dataclass(frozen=True)
class EvalPoint:
    """Order ``nu >= 0`` and argument ``t >= 0``."""

    nu: float
    t: float

    def __post_init__(self):
        if not self.nu >= 0:
            raise BesselDomainError(f"order must be non-negative, got {self.nu}")
        if not self.t >= 0:
            raise BesselDomainError(f"argument must be non-negative, got {self.t}")


def _check_series_args(nu: float, t: float):
    if not t >= 0:
        raise BesselDomainError(f"argument must be non-negative, got {t}")
    if t > SERIES_T_MAX:
        warnings.warn(f"power series at t = {t} > {SERIES_T_MAX} loses accuracy to cancellation",
                      AccuracyWarning, stacklevel=3)


def _power_series(nu: float, t: float, sign: float, terms: int) -> float:
    """(t/2)^nu sum_k sign^k (t/2)^{2k} / (k! Γ(nu+k+1)), any real nu."""
    if nu < 0 and nu == math.floor(nu):
        # J_{-m} = (-1)^m J_m and I_{-m} = I_m
        m = int(-nu)
        factor = (-1.0) ** m if sign < 0 else 1.0
        return factor * _power_series(float(m), t, sign, terms)
    if t == 0.0:
        return 1.0 if nu == 0 else (0.0 if nu > 0 else math.copysign(math.inf, rgamma(nu + 1)))
    half = 0.5 * t
    q = sign * half * half
    term = rgamma(nu + 1.0)
    if term == 0.0:
        return 0.0
    parts = [term]
    for k in range(1, terms):
        term *= q / (k * (nu + k))
        parts.append(term)
        if k * (k + nu) > abs(q) and abs(term) < 1e-17 * abs(parts[0] if k == 1 else sum(parts)):
            break
    return half ** nu * math.fsum(parts)


def j_series(nu: float, t: float, terms: int = 200) -> float:
    """J_ν(t) from its ascending power series.

    Reliable for ``t <= 30``; beyond that an :class:`AccuracyWarning` is
    issued because alternating terms cancel.  Negative non-integer orders
    are accepted (they are needed for :func:`y_combo`).
    """
    _check_series_args(nu, t)
    return _power_series(nu, t, -1.0, terms)


def i_series(nu: float, t: float, terms: int = 200) -> float:
    """I_ν(t) from its ascending power series (all terms positive)."""
    _check_series_args(nu, t)
    return _power_series(nu, t, 1.0, terms)


def _dist_to_integer(nu: float) -> float:
    return abs(nu - round(nu))


def y_combo(nu: float, t: float) -> float:
    """Y_ν(t) = (J_ν cos νπ - J_{-ν}) / sin νπ for non-integer ν."""
    if _dist_to_integer(nu) <= _NEAR_INTEGER:
        raise BesselDomainError(f"y_combo needs a non-integer order, got {nu}; use y_int")
    return (j_series(nu, t) * cospi(nu) - j_series(-nu, t)) / sinpi(nu)


def k_combo(nu: float, t: float) -> float:
    """K_ν(t) = π/2 (I_{-ν} - I_ν) / sin νπ for non-integer ν."""
    if _dist_to_integer(nu) <= _NEAR_INTEGER:
        raise BesselDomainError(f"k_combo needs a non-integer order, got {nu}; use k_int")
    return 0.5 * math.pi * (i_series(-nu, t) - i_series(nu, t)) / sinpi(nu)


def _require_positive_t(t: float):
    if not t > 0:
        raise BesselDomainError(f"integral representations need t > 0, got {t}")


def _value(res: QuadResult, what: str) -> float:
    if not res.converged:
        raise NonConvergenceError(f"{what}: quadrature did not converge (err_est={res.err_est:.3g})")
    return res.value


def _damped(expo: float) -> float:
    return math.exp(expo) if expo > -745.0 else 0.0


def j_int(nu: float, t: float, cfg: QuadConfig = INTEGRAL_CFG) -> float:
    """J_ν(t) from the Schläfli integral (finite part over (0, π) plus a damped tail)."""
    _require_positive_t(t)
    res = tanh_sinh(lambda x: math.cos(t * math.sin(x) - nu * x), 0.0, math.pi, cfg)
    s = sinpi(nu)
    if s != 0.0:
        tail = exp_sinh(lambda x: 0.0 if x > _EXP_ARG_MAX else _damped(-t * math.sinh(x) - nu * x),
                        0.0, cfg)
        res = res - tail.scaled(s)
    return _value(res, "j_int") / math.pi


def y_int(nu: float, t: float, cfg: QuadConfig = INTEGRAL_CFG) -> float:
    """Y_ν(t) from its integral representation; valid for integer ν as well."""
    _require_positive_t(t)
    c = cospi(nu)
    res = tanh_sinh(lambda x: math.sin(t * math.sin(x) - nu * x), 0.0, math.pi, cfg)

    def tail(x):
        if x > _EXP_ARG_MAX:
            return 0.0
        sh = t * math.sinh(x)
        return _damped(nu * x - sh) + c * _damped(-nu * x - sh)

    res = res - exp_sinh(tail, 0.0, cfg)
    return _value(res, "y_int") / math.pi


def i_int(nu: float, t: float, cfg: QuadConfig = INTEGRAL_CFG) -> float:
    """I_ν(t) from its integral representation."""
    _require_positive_t(t)
    res = tanh_sinh(lambda x: math.exp(t * math.cos(x)) * math.cos(nu * x), 0.0, math.pi, cfg)
    s = sinpi(nu)
    if s != 0.0:
        tail = exp_sinh(lambda x: 0.0 if x > _EXP_ARG_MAX else _damped(-t * math.cosh(x) - nu * x),
                        0.0, cfg)
        res = res - tail.scaled(s)
    return _value(res, "i_int") / math.pi


def k_int(nu: float, t: float, cfg: QuadConfig = INTEGRAL_CFG) -> float:
    """K_ν(t) = ½ ∫ exp(νx - t cosh x) dx over the real line."""
    _require_positive_t(t)
    res = sinh_sinh(
        lambda x: 0.0 if abs(x) > _EXP_ARG_MAX else _damped(nu * x - t * math.cosh(x)), cfg)
    return 0.5 * _value(res, "k_int")


def y0(x: float) -> float:
    """Y_0(x): ascending series for ``x <= 2``, integral representation above."""
    if not x > 0:
        raise BesselDomainError(f"Y_0 needs x > 0, got {x}")
    if x > 2.0:
        return y_int(0.0, x)
    q = 0.25 * x * x
    term = 1.0
    harmonic = 0.0
    parts = []
    for k in range(1, 60):
        term *= -q / (k * k)
        harmonic += 1.0 / k
        parts.append(-term * harmonic)
        if abs(term) < 1e-18:
            break
    return 2.0 / math.pi * ((math.log(0.5 * x) + EULER_GAMMA) * j_series(0.0, x) + math.fsum(parts))


def k0(x: float) -> float:
    """K_0(x): ascending series for ``x <= 2``, integral representation above."""
    if not x > 0:
        raise BesselDomainError(f"K_0 needs x > 0, got {x}")
    if x > 2.0:
        return k_int(0.0, x)
    q = 0.25 * x * x
    term = 1.0
    harmonic = 0.0
    parts = []
    for k in range(1, 60):
        term *= q / (k * k)
        harmonic += 1.0 / k
        parts.append(term * harmonic)
        if term < 1e-18:
            break
    return -(math.log(0.5 * x) + EULER_GAMMA) * i_series(0.0, x) + math.fsum(parts)


def bessel(kind, nu: float, t: float) -> float:
    """Evaluate a Bessel function through the most accurate baseline route.

    Series for J up to ``t = 12`` and for I up to ``t = 30``; series quotients for Y and K at
    non-integer order when they do not cancel; integral forms otherwise.
    """
    kind = BesselKind.parse(kind)
    if kind is BesselKind.J:
        return j_series(nu, t) if t <= J_SERIES_T_SAFE else j_int(nu, t)
    if kind is BesselKind.I:
        return i_series(nu, t) if t <= SERIES_T_MAX else i_int(nu, t)
    if kind is BesselKind.Y:
        if _dist_to_integer(nu) > 0.05 and t <= 10.0:
            return y_combo(nu, t)
        return y_int(nu, t)
    if _dist_to_integer(nu) > 0.05 and t <= 2.0:
        return k_combo(nu, t)
    return k_int(nu, t)
