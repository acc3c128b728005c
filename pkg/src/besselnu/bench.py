"""Timing harness: integral representations versus finite differences.

For each case the n-th order derivative is computed twice, once by
:func:`besselnu.derivatives.deriv` and once by Richardson-extrapolated
central differences of the integral forms of the base function.  The ratio
of median wall times is reported as ``chi = time_baseline / time_integral``.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import asdict, dataclass, field

from .bessel import BesselKind
from .derivatives import DerivRequest, deriv
from .errors import BesselDomainError
from .finite_diff import order_derivative_fd

__all__ = ["BENCH_SCHEMA", "BenchCase", "BenchReport", "SUITES", "run_bench"]

SUITES = {f"deriv-n{n}": n for n in range(1, 5)}
AGREE_RTOL = 1e-6
REFERENCE_CHI = 35.0

BENCH_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["suite", "baseline", "metadata", "cases"],
    "properties": {
        "suite": {"type": "string"},
        "baseline": {"type": "string"},
        "metadata": {
            "type": "object",
            "required": ["reference_chi", "reference_note", "repeats"],
            "properties": {
                "reference_chi": {"type": "number"},
                "reference_note": {"type": "string"},
                "repeats": {"type": "integer", "minimum": 1},
            },
        },
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "n", "nu", "t", "tol", "time_integral", "time_baseline",
                             "chi", "values_agree", "value_integral", "value_baseline", "n_evals"],
                "properties": {
                    "kind": {"enum": ["J", "Y", "I", "K"]},
                    "n": {"type": "integer", "minimum": 1},
                    "nu": {"type": "number"},
                    "t": {"type": "number", "exclusiveMinimum": 0},
                    "tol": {"type": "number", "exclusiveMinimum": 0},
                    "time_integral": {"type": "number", "exclusiveMinimum": 0},
                    "time_baseline": {"type": "number", "exclusiveMinimum": 0},
                    "chi": {"type": "number", "exclusiveMinimum": 0},
                    "values_agree": {"type": "boolean"},
                    "value_integral": {"type": "number"},
                    "value_baseline": {"type": "number"},
                    "n_evals": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}


@dataclass
class BenchCase:
    kind: str
    n: int
    nu: float
    t: float
    tol: float
    time_integral: float
    time_baseline: float
    chi: float
    values_agree: bool
    value_integral: float
    value_baseline: float
    n_evals: int


@dataclass
class BenchReport:
    suite: str
    baseline: str = "Richardson central differences of the integral representations (vs. FD baseline)"
    metadata: dict = field(default_factory=dict)
    cases: list = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(c.values_agree for c in self.cases)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "baseline": self.baseline, "metadata": dict(self.metadata),
                "cases": [asdict(c) for c in self.cases]}


def _median_time(fn, repeats: int):
    times = []
    out = None
    for _ in range(repeats):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    # perf_counter can tie at zero for trivially fast calls; keep chi finite and positive
    return max(statistics.median(times), 1e-9), out


def run_bench(suite: str, tolerances, repeats: int, points=((5.0, 5.0),), kinds=("J",)) -> BenchReport:
    """Time every (kind, point, tolerance) case of a suite.

    Parameters
    ----------
    suite : str
        One of ``deriv-n1`` .. ``deriv-n4``; fixes the derivative order.
    tolerances : iterable of float
        Quadrature tolerances for the integral method.
    repeats : int
        Timing repetitions per case; the median is reported.
    points : iterable of (nu, t)
    kinds : iterable of str

    Returns
    -------
    BenchReport
    """
    if suite not in SUITES:
        raise BesselDomainError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    if repeats < 1:
        raise BesselDomainError(f"repeats must be at least 1, got {repeats}")
    tolerances = [float(x) for x in tolerances]
    if not tolerances or any(not x > 0 for x in tolerances):
        raise BesselDomainError("tolerances must be a non-empty list of positive numbers")
    n = SUITES[suite]
    report = BenchReport(suite=suite, metadata={
        "reference_chi": REFERENCE_CHI,
        "reference_note": "published ratio against a computer-algebra derivative routine; "
                          "external and not reproducible with this baseline",
        "repeats": repeats,
    })
    for kind in kinds:
        kind = BesselKind.parse(kind).value
        for nu, t in points:
            time_fd, fd = _median_time(lambda: order_derivative_fd(kind, n, nu, t, route="integral"),
                                       repeats)
            for tol in tolerances:
                req = DerivRequest(kind, n, nu, t, tol)
                time_int, res = _median_time(lambda: deriv(req), repeats)
                agree = abs(res.value - fd.value) <= AGREE_RTOL * max(abs(fd.value), 1e-300)
                report.cases.append(BenchCase(
                    kind=kind, n=n, nu=nu, t=t, tol=tol,
                    time_integral=time_int, time_baseline=time_fd, chi=time_fd / time_int,
                    values_agree=bool(agree and res.converged),
                    value_integral=res.value, value_baseline=fd.value, n_evals=res.n_evals,
                ))
    return report
