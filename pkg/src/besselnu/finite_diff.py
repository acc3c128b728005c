"""Central finite differences with Richardson extrapolation.

Used as an independent oracle for order derivatives and as the timing
baseline of the benchmark harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .bessel import J_SERIES_T_SAFE, BesselKind, i_int, i_series, j_int, j_series, k_int, y_int
from .errors import BesselDomainError
from .quadrature import QuadConfig

__all__ = ["FDResult", "central_difference", "base_function", "order_derivative_fd",
           "richardson_derivative"]

# base functions for differencing must be smooth in ν, so each kind uses one route
_TIGHT = QuadConfig(tol=1e-14)


@dataclass(frozen=True)
class FDResult:
    value: float
    err_est: float
    n_evals: int


def central_difference(f: Callable[[float], float], x: float, n: int, h: float) -> float:
    """n-th derivative from the order-2 central stencil of width ``n h``.

    Uses ``h^-n sum_k (-1)^k C(n, k) f(x + (n/2 - k) h)``; its error
    expands in even powers of ``h``.
    """
    if n < 0:
        raise BesselDomainError(f"derivative order must be non-negative, got {n}")
    if n == 0:
        return f(x)
    terms = [(-1) ** k * math.comb(n, k) * f(x + (0.5 * n - k) * h) for k in range(n + 1)]
    return math.fsum(terms) / h**n


def richardson_derivative(f: Callable[[float], float], x: float, n: int, h: float | None = None,
                          levels: int = 5) -> FDResult:
    """Richardson-extrapolated central difference of order ``n``.

    Parameters
    ----------
    f : callable
        Smooth scalar function.
    x : float
        Evaluation point.
    n : int
        Derivative order.
    h : float, optional
        Coarsest step; defaults to ``0.2 * n``, a compromise between
        truncation and roundoff for ``f`` accurate to about 1e-15.
    levels : int
        Number of step halvings; each removes one more even power of ``h``.

    Returns
    -------
    FDResult
        ``err_est`` is the change made by the last extrapolation column.
    """
    if levels < 1:
        raise BesselDomainError("levels must be at least 1")
    if h is None:
        h = 0.2 * max(n, 1)
    calls = 0

    def counted(u):
        nonlocal calls
        calls += 1
        return f(u)

    table = [[central_difference(counted, x, n, h / 2**i)] for i in range(levels)]
    for i in range(1, levels):
        for j in range(1, i + 1):
            factor = 4.0**j
            table[i].append(table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0))
    best = table[-1][-1]
    err = abs(best - table[-1][-2]) if levels > 1 else math.inf
    return FDResult(best, err, calls)


def base_function(kind, route: str = "series") -> Callable[[float, float], float]:
    """Single-route ``C_ν(t)`` used for differencing in ν.

    With ``route="series"`` J and I use the power series (J only up to
    ``t = 12``, where its cancellation is still harmless).  Y and K, and every kind with ``route="integral"``, use the
    integral forms at a tight tolerance; the quotient definitions of Y and K
    break down at integer order.
    """
    kind = BesselKind.parse(kind)
    if route not in ("series", "integral"):
        raise BesselDomainError(f"unknown route {route!r}")
    if kind is BesselKind.J:
        if route == "series":
            return lambda nu, t: j_series(nu, t) if t <= J_SERIES_T_SAFE else j_int(nu, t, _TIGHT)
        return lambda nu, t: j_int(nu, t, _TIGHT)
    if kind is BesselKind.I:
        return i_series if route == "series" else (lambda nu, t: i_int(nu, t, _TIGHT))
    if kind is BesselKind.Y:
        return lambda nu, t: y_int(nu, t, _TIGHT)
    return lambda nu, t: k_int(nu, t, _TIGHT)


def order_derivative_fd(kind, n: int, nu: float, t: float, route: str = "series",
                        **kwargs) -> FDResult:
    """``∂ⁿ/∂νⁿ C_ν(t)`` by Richardson-extrapolated central differences."""
    f = base_function(kind, route)
    return richardson_derivative(lambda v: f(v, t), nu, n, **kwargs)
