"""Command-line front end.

Subcommands
-----------
deriv     n-th order derivative at one point
frac      fractional order integral at one point
tail      integral over the order from ν to infinity
grid      CSV sweep over a (ν, t) rectangle
bench     timing ratio against the finite-difference baseline (JSON)
selftest  oracle suites

Exit codes: 0 success, 1 usage error, 2 non-convergence, 3 benchmark
disagreement, 4 self-test failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bench import SUITES, run_bench
from .bessel import BesselKind
from .derivatives import DerivRequest, deriv, value_at_zero
from .errors import BesselDomainError, NonConvergenceError, QuadratureError
from .fractional import FracRequest, frac_eval, frac_value_at_zero
from .selftest import run_selftest
from .tails import tail_i, tail_j

__all__ = ["GridSpec", "main"]

EXIT_OK, EXIT_USAGE, EXIT_NONCONV, EXIT_BENCH, EXIT_SELFTEST = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


@dataclass(frozen=True)
class GridSpec:
    """Rectangular (ν, t) sweep; both axes include their end points."""

    nu_min: float
    nu_max: float
    t_min: float
    t_max: float
    nu_steps: int
    t_steps: int

    def __post_init__(self):
        if not self.nu_min < self.nu_max or not self.t_min < self.t_max:
            raise BesselDomainError("grid needs min < max on both axes")
        if self.nu_steps < 2 or self.t_steps < 2:
            raise BesselDomainError("grid needs at least 2 steps per axis")
        if self.nu_min < 0 or self.t_min < 0:
            raise BesselDomainError("grid needs nu >= 0 and t >= 0")

    @staticmethod
    def _axis(lo, hi, steps):
        return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]

    def points(self):
        """Row-major (ν outer, t inner) list of grid points."""
        ts = self._axis(self.t_min, self.t_max, self.t_steps)
        return [(nu, t) for nu in self._axis(self.nu_min, self.nu_max, self.nu_steps) for t in ts]


def _kind(text: str) -> str:
    try:
        return BesselKind.parse(text).value
    except BesselDomainError:
        raise argparse.ArgumentTypeError(f"unknown kind {text!r} (choose J, Y, I or K)") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _fmt(x: float) -> str:
    return "%.17g" % x


def _emit(payload: dict, as_json: bool):
    if as_json:
        print(json.dumps(payload))
        return
    parts = [f"{k}={_fmt(v) if isinstance(v, float) else v}" for k, v in payload.items()]
    print(" ".join(parts))


def _limit_payload(value: float, note: str) -> dict:
    return {"value": value, "err_est": 0.0, "n_evals": 0, "converged": True, "note": note}


_LIMIT_NOTE = "limit value as t -> 0+"


def cmd_deriv(args) -> int:
    if args.t == 0:
        # validate the remaining fields at a positive t, then report the limit
        DerivRequest(args.kind, args.n, args.nu, 1.0, args.tol)
        _emit(_limit_payload(value_at_zero(args.kind, args.n, args.nu), _LIMIT_NOTE), args.json)
        return EXIT_OK
    res = deriv(DerivRequest(args.kind, args.n, args.nu, args.t, args.tol))
    _emit({"value": res.value, "err_est": res.err_est, "n_evals": res.n_evals,
           "converged": res.converged}, args.json)
    return EXIT_OK if res.converged else EXIT_NONCONV


def cmd_frac(args) -> int:
    if args.t == 0:
        FracRequest(args.kind, args.alpha, args.nu0, args.nu, 1.0, args.tol)
        value = frac_value_at_zero(args.kind, args.alpha, args.nu0, args.nu)
        _emit(_limit_payload(value, _LIMIT_NOTE), args.json)
        return EXIT_OK
    res = frac_eval(FracRequest(args.kind, args.alpha, args.nu0, args.nu, args.t, args.tol))
    _emit({"value": res.value, "err_est": res.err_est, "n_evals": res.n_evals,
           "converged": res.converged}, args.json)
    return EXIT_OK if res.converged else EXIT_NONCONV


def cmd_tail(args) -> int:
    fn = tail_j if args.kind == "J" else tail_i
    res = fn(args.nu, args.t, args.tol)
    _emit({"value": res.value, "err_est": res.err_est, "n_evals": res.n_evals,
           "converged": res.converged}, args.json)
    return EXIT_OK if res.converged else EXIT_NONCONV


def _limit_status(value: float) -> str:
    if math.isinf(value):
        return "limit -inf" if value < 0 else "limit +inf"
    return f"limit {value:g}"


def _grid_point(job) -> tuple:
    """Evaluate one grid point; returns (value, err_est, status)."""
    kind, n, alpha, nu0, nu, t, tol = job
    try:
        if alpha is None:
            if t == 0:
                value = value_at_zero(kind, n, nu)
                return value, 0.0, _limit_status(value)
            res = deriv(DerivRequest(kind, n, nu, t, tol))
        else:
            if nu <= nu0:
                return math.nan, math.nan, "skipped nu <= nu0"
            if t == 0:
                value = frac_value_at_zero(kind, alpha, nu0, nu)
                return value, 0.0, _limit_status(value)
            res = frac_eval(FracRequest(kind, alpha, nu0, nu, t, tol))
    except (NonConvergenceError, QuadratureError, OverflowError) as exc:
        return math.nan, math.nan, f"error {type(exc).__name__}"
    return res.value, res.err_est, "ok" if res.converged else "nonconverged"


def grid_rows(spec: GridSpec, kind: str, n: int = 0, alpha: float | None = None, nu0: float = 0.0,
              tol: float = 1e-10, workers: int = 1):
    """Evaluate a sweep; rows are returned in row-major order whatever the worker count."""
    jobs = [(kind, n, alpha, nu0, nu, t, tol) for nu, t in spec.points()]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_grid_point, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        results = [_grid_point(j) for j in jobs]
    return [(nu, t, *r) for (nu, t), r in zip(spec.points(), results)]


def cmd_grid(args) -> int:
    spec = GridSpec(args.nu_min, args.nu_max, args.t_min, args.t_max, args.nu_steps, args.t_steps)
    if args.alpha is None and args.n is None:
        raise _UsageError("grid: one of --n or --alpha is required")
    if args.alpha is not None and not args.alpha > 0:
        raise _UsageError("grid: --alpha must be positive")
    rows = grid_rows(spec, args.kind, args.n or 0, args.alpha, args.nu0, args.tol, args.workers)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["nu", "t", "value", "err_est", "status"])
        for nu, t, value, err, status in rows:
            writer.writerow([_fmt(nu), _fmt(t), _fmt(value), _fmt(err), status])
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_bench(args) -> int:
    points = []
    for item in args.points.split(";"):
        nu, t = (float(x) for x in item.split(","))
        points.append((nu, t))
    tolerances = [float(x) for x in args.tolerances.split(",")]
    report = run_bench(args.suite, tolerances, args.repeats, points, args.kinds.split(","))
    text = json.dumps(report.to_dict(), indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return EXIT_OK if report.all_agree else EXIT_BENCH


def cmd_selftest(args) -> int:
    outcomes = run_selftest(args.filter, args.tol)
    if not outcomes:
        print(f"no suite matches {args.filter!r}", file=sys.stderr)
        return EXIT_USAGE
    width = max(len(f"{o.suite}/{o.name}") for o in outcomes)
    for o in outcomes:
        label = f"{o.suite}/{o.name}".ljust(width)
        mark = "PASS" if o.passed else "FAIL"
        line = f"{mark}  {label}  err={o.error:.2e}  bound={o.bound:.0e}  {o.seconds:.2f}s"
        if o.detail:
            line += f"  {o.detail}"
        print(line)
    failed = sum(not o.passed for o in outcomes)
    print(f"{len(outcomes) - failed}/{len(outcomes)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="besselnu", description="Order derivatives and order integrals of Bessel functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("deriv", help="n-th derivative with respect to the order")
    d.add_argument("--kind", type=_kind, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--nu", type=float, required=True)
    d.add_argument("--t", type=float, required=True)
    d.add_argument("--tol", type=float, default=1e-10)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_deriv)

    f = sub.add_parser("frac", help="fractional integral with respect to the order")
    f.add_argument("--kind", type=_kind, required=True)
    f.add_argument("--alpha", type=float, required=True)
    f.add_argument("--nu0", type=float, required=True)
    f.add_argument("--nu", type=float, required=True)
    f.add_argument("--t", type=float, required=True)
    f.add_argument("--tol", type=float, default=1e-10)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_frac)

    t = sub.add_parser("tail", help="integral over the order from nu to infinity")
    t.add_argument("--kind", type=_kind, required=True)
    t.add_argument("--nu", type=float, required=True)
    t.add_argument("--t", type=float, required=True)
    t.add_argument("--tol", type=float, default=1e-10)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_tail)

    g = sub.add_parser("grid", help="CSV sweep over a (nu, t) rectangle")
    g.add_argument("--kind", type=_kind, required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--alpha", type=float)
    g.add_argument("--nu0", type=float, default=0.0)
    g.add_argument("--nu-min", type=float, default=0.0)
    g.add_argument("--nu-max", type=float, default=10.0)
    g.add_argument("--nu-steps", type=int, default=64)
    g.add_argument("--t-min", type=float, default=0.0)
    g.add_argument("--t-max", type=float, default=10.0)
    g.add_argument("--t-steps", type=int, default=64)
    g.add_argument("--tol", type=float, default=1e-10)
    g.add_argument("--workers", type=_positive_int, default=1)
    g.add_argument("--output", help="write CSV here instead of stdout")
    g.set_defaults(func=cmd_grid)

    b = sub.add_parser("bench", help="timing ratio against finite differences (JSON)")
    b.add_argument("--suite", choices=sorted(SUITES), required=True)
    b.add_argument("--tolerances", default="1e-6,1e-8,1e-10", help="comma-separated list")
    b.add_argument("--repeats", type=_positive_int, default=5)
    b.add_argument("--points", default="5,5", help="semicolon-separated nu,t pairs")
    b.add_argument("--kinds", default="J", help="comma-separated kinds")
    b.add_argument("--output", help="also write the JSON report here")
    b.set_defaults(func=cmd_bench)

    s = sub.add_parser("selftest", help="run the oracle suites")
    s.add_argument("--filter", help="only suites whose name contains this text")
    s.add_argument("--tol", type=float, help="override the quadrature tolerance of every check")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "tail" and args.kind not in ("J", "I"):
            raise _UsageError("tail: --kind must be J or I")
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (BesselDomainError, ValueError) as exc:
        print(f"besselnu: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergenceError, QuadratureError) as exc:
        print(f"besselnu: {exc}", file=sys.stderr)
        return EXIT_NONCONV


if __name__ == "__main__":
    sys.exit(main())
