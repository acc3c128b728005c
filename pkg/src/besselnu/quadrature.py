"""Double-exponential quadrature: tanh-sinh, exp-sinh and sinh-sinh rules.

All three rules are the trapezoidal rule in an auxiliary variable ``s`` after
a change of variables that makes the integrand decay double exponentially.
The step starts at ``h0`` and is halved each level; only the new (odd) nodes
are evaluated at each level.  The extent of the ``s`` grid in each direction
is fixed at level 0 by walking outward until the weighted integrand is
negligible, so the node set at every level is deterministic.

Integrands may return ``float`` or ``complex``; complex values are summed
componentwise over a shared node set.  Sums use :func:`math.fsum`, so the
result does not depend on summation order and mirrored integrands on
symmetric rules give bit-identical sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .errors import BesselDomainError, QuadratureError

__all__ = ["QuadConfig", "QuadResult", "exp_sinh", "sinh_sinh", "tanh_sinh"]

Number = Union[float, complex]

_HALF_PI = 0.5 * math.pi
# largest |pi/2 sinh s| for which exp() stays finite
_ARG_MAX = 700.0
# |s| beyond which a non-finite integrand value is treated as an endpoint artefact
_ENDPOINT_S = 3.0
# s beyond which an exp-sinh / sinh-sinh node is in the infinite tail (|x| > ~14)
_INFINITE_S = 1.5
# relative size of a weighted term below which the walk stops
_TAIL_REL = 1e-20
_S_HARD_MAX = 8.0
_EPS = 2.0**-52


@dataclass(frozen=True)
class QuadConfig:
    """Step-halving schedule and tolerance for the DE rules.

    ``tol`` is a mixed tolerance: a level is accepted once the inter-level
    difference is at most ``max(tol, tol * |value|)``.  ``min_level`` lets
    callers force a fixed-level run (``min_level == max_level``).
    """

    tol: float = 1e-10
    max_level: int = 10
    h0: float = 1.0
    cutoff: float = 1e-300
    min_level: int = 3

    def __post_init__(self):
        if not self.tol > 0:
            raise BesselDomainError("QuadConfig.tol must be positive")
        if self.max_level < 3:
            raise BesselDomainError("QuadConfig.max_level must be at least 3")
        if not 0 <= self.min_level <= self.max_level:
            raise BesselDomainError("QuadConfig.min_level must lie in [0, max_level]")
        if not self.h0 > 0:
            raise BesselDomainError("QuadConfig.h0 must be positive")


@dataclass(frozen=True)
class QuadResult:
    value: Number
    err_est: float
    n_evals: int
    converged: bool
    level_used: int

    def __add__(self, other: "QuadResult") -> "QuadResult":
        return QuadResult(
            self.value + other.value,
            self.err_est + other.err_est,
            self.n_evals + other.n_evals,
            self.converged and other.converged,
            max(self.level_used, other.level_used),
        )

    def scaled(self, c: Number) -> "QuadResult":
        return QuadResult(self.value * c, self.err_est * abs(c), self.n_evals,
                          self.converged, self.level_used)

    def __sub__(self, other: "QuadResult") -> "QuadResult":
        return self + other.scaled(-1.0)


class _Accumulator:
    def __init__(self):
        self.re: list[float] = []
        self.im: list[float] = []
        self.is_complex = False
        self.magnitude = 0.0

    def add(self, v: Number):
        self.magnitude += abs(v)
        if isinstance(v, complex):
            self.is_complex = True
            self.re.append(v.real)
            self.im.append(v.imag)
        else:
            self.re.append(v)

    def total(self) -> Number:
        if self.is_complex:
            return complex(math.fsum(self.re), math.fsum(self.im))
        return math.fsum(self.re)


def _finite(v: Number) -> bool:
    if isinstance(v, complex):
        return math.isfinite(v.real) and math.isfinite(v.imag)
    return math.isfinite(v)


def _call(f, node) -> Number:
    try:
        return f(*node)
    except (OverflowError, ZeroDivisionError):
        return math.nan


def _de_sum(rule, f, cfg: QuadConfig) -> QuadResult:
    """Drive the level-halving loop for a rule.

    ``rule(s)`` returns ``(args, weight, tail)`` where ``args`` is the argument
    tuple for ``f``, ``weight`` is ``dx/ds`` and ``tail`` marks nodes in an
    endpoint or infinite-tail region; it returns ``None`` when the node lies
    outside the representable range.
    """
    n_evals = 0
    acc = _Accumulator()

    def term(s: float) -> Number | None:
        nonlocal n_evals
        node = rule(s)
        if node is None:
            return None
        args, w, tail = node
        n_evals += 1
        v = _call(f, args)
        if not _finite(v):
            if tail:
                return None
            raise QuadratureError(f"integrand is not finite at x = {args[0]!r}")
        return w * v

    centre = term(0.0)
    if centre is None:
        raise QuadratureError("integrand is not finite at the centre node")
    acc.add(centre)
    limits = []
    h0 = cfg.h0
    for direction in (1.0, -1.0):
        scale = abs(centre)
        prev = abs(centre)
        k = 1
        while True:
            s = direction * k * h0
            if abs(s) > _S_HARD_MAX:
                break
            v = term(s)
            if v is None:
                break
            acc.add(v)
            mag = abs(v)
            scale = max(scale, mag)
            if mag <= max(_TAIL_REL * scale, cfg.cutoff) and mag <= prev:
                break
            prev = mag
            k += 1
        limits.append(k * h0)
    s_right, s_left = limits

    h = h0
    value = h * acc.total()
    err = math.inf
    level = 0
    for level in range(1, cfg.max_level + 1):
        h *= 0.5
        k = 1
        while k * h < s_right:
            v = term(k * h)
            if v is None:
                break
            acc.add(v)
            k += 2
        k = 1
        while k * h < s_left:
            v = term(-k * h)
            if v is None:
                break
            acc.add(v)
            k += 2
        new = h * acc.total()
        # an inter-level difference below the rounding level of the sum certifies nothing
        err = max(abs(new - value), _EPS * h * acc.magnitude)
        value = new
        if level >= cfg.min_level and err <= max(cfg.tol, cfg.tol * abs(value)):
            return QuadResult(value, err, n_evals, True, level)
    return QuadResult(value, err, n_evals, False, level)


def tanh_sinh(f: Callable, a: float, b: float, cfg: QuadConfig | None = None, *,
              endpoint_distances: bool = False) -> QuadResult:
    """Integrate ``f`` over the finite interval ``(a, b)``.

    Abscissas are ``x = (a+b)/2 + (b-a)/2 tanh(pi/2 sinh s)``.  The rule never
    evaluates at ``a`` or ``b``, so integrable endpoint singularities are
    allowed.

    Parameters
    ----------
    f : callable
        ``f(x)``, or ``f(x, x - a, b - x)`` if ``endpoint_distances`` is set.
        The distances are computed without cancellation, which matters for
        singular factors such as ``(b - x)**(alpha - 1)``.
    a, b : float
        Limits with ``a < b``.
    cfg : QuadConfig, optional

    Returns
    -------
    QuadResult
        ``converged`` is false (and ``value`` is the last estimate) if
        ``max_level`` is reached without meeting the tolerance.
    """
    cfg = cfg or QuadConfig()
    if not a < b:
        raise BesselDomainError(f"tanh_sinh requires a < b, got ({a}, {b})")
    half = 0.5 * (b - a)

    def rule(s):
        u = _HALF_PI * math.sinh(s)
        if abs(u) > _ARG_MAX:
            return None
        # complement 1 - tanh|u| = 2 / (1 + e^{2|u|}), exact for large |u|
        e = math.exp(-2.0 * abs(u))
        comp = 2.0 * e / (1.0 + e)
        dist = half * comp
        if dist == 0.0:
            return None
        w = half * _HALF_PI * math.cosh(s) * comp * (2.0 - comp)
        if s >= 0:
            x = b - dist
            da, db = 2.0 * half - dist, dist
        else:
            x = a + dist
            da, db = dist, 2.0 * half - dist
        tail = abs(s) >= _ENDPOINT_S
        if endpoint_distances:
            return (x, da, db), w, tail
        return (x,), w, tail

    return _de_sum(rule, f, cfg)


def exp_sinh(f: Callable, a: float, cfg: QuadConfig | None = None) -> QuadResult:
    """Integrate ``f`` over ``(a, inf)`` with ``x = a + exp(pi/2 sinh s)``.

    ``f`` must decay at least exponentially.  A non-finite value (or an
    ``OverflowError``) in the far tail ends the walk in that direction;
    elsewhere it raises :class:`QuadratureError`.
    """
    cfg = cfg or QuadConfig()

    def rule(s):
        u = _HALF_PI * math.sinh(s)
        if abs(u) > _ARG_MAX:
            return None
        e = math.exp(u)
        tail = s >= _INFINITE_S or s <= -_ENDPOINT_S
        return (a + e,), _HALF_PI * math.cosh(s) * e, tail

    return _de_sum(rule, f, cfg)


def sinh_sinh(f: Callable, cfg: QuadConfig | None = None) -> QuadResult:
    """Integrate ``f`` over the whole real line with ``x = sinh(pi/2 sinh s)``.

    The node set is symmetric: ``x(-s) = -x(s)`` with equal weights.
    """
    cfg = cfg or QuadConfig()

    def rule(s):
        u = _HALF_PI * math.sinh(s)
        if abs(u) > _ARG_MAX:
            return None
        tail = abs(s) >= _INFINITE_S
        return (math.sinh(u),), _HALF_PI * math.cosh(s) * math.cosh(u), tail

    return _de_sum(rule, f, cfg)
