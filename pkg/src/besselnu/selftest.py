"""Oracle suites run by ``besselnu selftest``.

Each check computes a quantity two independent ways and compares the
difference with a stated bound.  A quadrature tolerance override is passed
to every check that integrates, so an unattainable tolerance surfaces as
non-convergence instead of being silently ignored.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from typing import Callable

from .bessel import i_series, j_int, j_series, k_int, y_combo, y_int
from .complexmath import c_pow_principal, digamma, gamma_reg_lower, EULER_GAMMA
from .derivatives import (DerivRequest, deriv, di_dnu_series, dj_dnu_apelblat, dj_dnu_series,
                          zero_t_finite, zero_t_tail)
from .errors import NonConvergenceError
from .finite_diff import order_derivative_fd
from .fractional import (FracRequest, frac_eval, frac_int_exp, frac_k_imag, order_quadrature_oracle,
                         riemann_liouville_oracle)
from .quadrature import QuadConfig, QuadResult, exp_sinh, sinh_sinh, tanh_sinh
from .tails import tail_i, tail_j, tail_oracle

__all__ = ["SUITE_NAMES", "Check", "CheckOutcome", "run_selftest"]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    # fn(tol) -> (error, bound); tol is None unless overridden
    fn: Callable[[float | None], tuple]


@dataclass(frozen=True)
class CheckOutcome:
    suite: str
    name: str
    passed: bool
    error: float
    bound: float
    seconds: float
    detail: str = ""


def _ok(res: QuadResult):
    if not res.converged:
        raise NonConvergenceError(f"quadrature did not converge (err_est={res.err_est:.3g})")
    return res.value


def _cfg(tol, default=1e-12) -> QuadConfig:
    return QuadConfig(tol=default if tol is None else tol)


def _rel(a, b) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def _core(tol):
    z = complex(0.4, -1.3)
    yield "P(1, z) = 1 - e^-z", abs(gamma_reg_lower(1.0, z) - (1 - cmath.exp(-z))), 1e-14
    yield "P(a, 50) -> 1", max(abs(gamma_reg_lower(a, 50.0) - 1) for a in (0.5, 1.0, 2.5)), 1e-12
    w = complex(-2.2, 3.1)
    yield "conjugation", abs(gamma_reg_lower(0.7, w.conjugate()) - gamma_reg_lower(0.7, w).conjugate()), 1e-13
    # P(a+1, z) = P(a, z) - z^a e^{-z} / Γ(a+1)
    rec = gamma_reg_lower(0.7, w) - c_pow_principal(w, 0.7) * cmath.exp(-w) / math.gamma(1.7)
    yield "recurrence", abs(gamma_reg_lower(1.7, w) - rec), 1e-12
    yield "digamma(1) = -gamma", abs(digamma(1.0) + EULER_GAMMA), 1e-15
    a, z = 0.7, complex(2.0, 3.0)
    # straight-path quadrature of t^{a-1} e^{-t} from 0 to z
    re = tanh_sinh(lambda s: (z**a * s ** (a - 1) * cmath.exp(-z * s)).real, 0.0, 1.0, _cfg(tol))
    im = tanh_sinh(lambda s: (z**a * s ** (a - 1) * cmath.exp(-z * s)).imag, 0.0, 1.0, _cfg(tol))
    path = complex(_ok(re), _ok(im)) / math.gamma(a)
    yield "P vs path quadrature", abs(gamma_reg_lower(a, z) - path), 1e-11


def _quadrature(tol):
    cfg = _cfg(tol)
    yield "4/(1+x^2) on (0,1)", abs(_ok(tanh_sinh(lambda x: 4 / (1 + x * x), 0, 1, cfg)) - math.pi), 1e-12
    yield "x^-1/2 on (0,1)", abs(_ok(tanh_sinh(lambda x: x**-0.5, 0, 1, cfg)) - 2), 1e-12
    yield "e^-x on (0,inf)", abs(_ok(exp_sinh(lambda x: math.exp(-x), 0, cfg)) - 1), 1e-12
    yield "Gaussian", abs(_ok(sinh_sinh(lambda x: math.exp(-x * x), cfg)) - math.sqrt(math.pi)), 1e-12
    k_half = 0.5 * _ok(sinh_sinh(lambda x: math.exp(0.5 * x - math.cosh(x)) if abs(x) < 700 else 0.0, cfg))
    yield "K_1/2(1) closed form", abs(k_half - math.sqrt(math.pi / 2) / math.e), 1e-12


def _bessel(tol):
    cfg = _cfg(tol)
    yield "j_series vs j_int", max(abs(j_series(nu, t) - j_int(nu, t, cfg))
                                   for nu in (0.0, 0.5, 2.5) for t in (0.5, 2.0, 10.0)), 1e-10
    yield "y_combo vs y_int", abs(y_combo(0.25, 3.0) - y_int(0.25, 3.0, cfg)), 1e-10
    yield "k_int closed form", abs(k_int(0.5, 1.0, cfg) - math.sqrt(math.pi / 2) / math.e), 1e-12
    nu, t = 0.3, 2.0
    w = j_int(nu + 1, t, cfg) * y_int(nu, t, cfg) - j_int(nu, t, cfg) * y_int(nu + 1, t, cfg)
    yield "Wronskian", abs(w - 2 / (math.pi * t)), 1e-9


def _derivatives(tol):
    t_ = 1e-10 if tol is None else tol
    yield "J n=1 vs series", max(_rel(_ok(deriv(DerivRequest("J", 1, nu, t, t_))), dj_dnu_series(nu, t))
                                 for nu in (0.25, 2.0) for t in (0.5, 5.0)), 1e-9
    yield "I n=1 vs series", _rel(_ok(deriv(DerivRequest("I", 1, 0.5, 2.0, t_))), di_dnu_series(0.5, 2.0)), 1e-9
    for kind in ("Y", "K"):
        v = _ok(deriv(DerivRequest(kind, 3, 1.3, 2.0, t_)))
        yield f"{kind} n=3 vs finite differences", _rel(v, order_derivative_fd(kind, 3, 1.3, 2.0).value), 1e-6
    yield "t = 0 identity", max(abs(_ok(zero_t_tail(n, nu, 1e-12 if tol is None else tol))
                                    - _ok(zero_t_finite(n, nu, 1e-12 if tol is None else tol)))
                                for n in range(5) for nu in (0.5, 1.5)), 1e-10
    yield "Apelblat vs integral", abs(dj_dnu_apelblat(1.0, 1.0, _cfg(tol, 1e-11))
                                      - _ok(deriv(DerivRequest("J", 1, 1.0, 1.0, t_)))), 1e-8


def _fractional(tol):
    t_ = 1e-10 if tol is None else tol
    r = _ok(frac_eval(FracRequest("K", 1.0, 0.5, 1.5, 2.0, t_)))
    yield "K alpha=1 vs order quadrature", abs(r - order_quadrature_oracle("K", 0.5, 1.5, 2.0, t_)), 1e-8
    r = _ok(frac_eval(FracRequest("J", 0.5, 0.5, 2.0, 2.0, t_)))
    rl = riemann_liouville_oracle(lambda m: j_series(m, 2.0), 0.5, 0.5, 2.0, 1e-12 if tol is None else tol)
    yield "J alpha=0.5 vs RL oracle", abs(r - rl), 1e-8
    s = complex(-0.3, math.pi)
    rl_re = riemann_liouville_oracle(lambda u: cmath.exp(s * u).real, 0.5, 0.1, 1.2, 1e-13 if tol is None else tol)
    rl_im = riemann_liouville_oracle(lambda u: cmath.exp(s * u).imag, 0.5, 0.1, 1.2, 1e-13 if tol is None else tol)
    yield "exponential closed form", abs(frac_int_exp(0.5, s, 0.1, 1.2) - complex(rl_re, rl_im)), 1e-10
    yield "K imaginary part", abs(_ok(frac_k_imag(0.5, 0.5, 1.5, 2.0, t_))), 1e-10
    r = _ok(frac_eval(FracRequest("I", 2.0, 0.0, 1.0, 1.0, t_)))
    yield "I alpha=2 vs RL oracle", abs(r - riemann_liouville_oracle(lambda m: i_series(m, 1.0), 2.0, 0.0, 1.0)), 1e-8


def _tails(tol):
    t_ = 1e-10 if tol is None else tol
    yield "tail_j vs oracle", abs(_ok(tail_j(0.0, 2.0, t_)) - tail_oracle("J", 0.0, 2.0)), 1e-9
    yield "tail_i vs oracle", abs(_ok(tail_i(1.0, 2.0, t_)) - tail_oracle("I", 1.0, 2.0)), 1e-9
    yield "tail_j far tail", abs(_ok(tail_j(40.0, 1.0, t_))), 1e-12


_SUITES = {
    "core_complex": _core,
    "quadrature": _quadrature,
    "bessel_base": _bessel,
    "order_derivatives": _derivatives,
    "fractional": _fractional,
    "infinite_order_integrals": _tails,
}
SUITE_NAMES = tuple(_SUITES)


def run_selftest(filter_: str | None = None, tol: float | None = None) -> list[CheckOutcome]:
    """Run every suite whose name contains ``filter_``.

    An exception inside a suite is recorded as a failed check and the
    remaining suites still run.
    """
    outcomes = []
    for suite, gen in _SUITES.items():
        if filter_ and filter_ not in suite:
            continue
        it = gen(tol)
        while True:
            start = time.perf_counter()
            try:
                name, err, bound = next(it)
            except StopIteration:
                break
            except Exception as exc:  # noqa: BLE001 - any failure is a failed check
                outcomes.append(CheckOutcome(suite, "(aborted)", False, math.nan, math.nan,
                                             time.perf_counter() - start, f"{type(exc).__name__}: {exc}"))
                break
            outcomes.append(CheckOutcome(suite, name, bool(err <= bound), err, bound,
                                         time.perf_counter() - start))
    return outcomes
