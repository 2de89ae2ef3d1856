"""Command-line front end.

Subcommands:
  analyze    full report for one state (JSON to stdout, optional CSV row)
  sweep      parameter-grid CSV over the squeezed-thermal/fiber family
  threshold  bisection root of the separability interval along one knob
  proptest   run the randomized property suites

Exit codes: 0 success, 1 usage or parse error, 2 unphysical input,
3 property-suite failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass

import numpy as np

from .core import (
    CovarianceMatrix,
    StandardFormParams,
    UnphysicalState,
    build_standard_cm,
    local_invariants,
)
from .minkowski import interval_separability
from .properties import format_report, run_all
from .records import (
    CSV_COLUMNS,
    analyze,
    format_number,
    to_csv_row,
    to_json,
    write_csv,
)
from .states import FiberParams, TmtssParams, lossy_fiber, tmtss

SWEEP_PARAMS = ("d", "r", "nbar", "ell")
BISECT_F_TOL = 1e-10
BISECT_X_TOL = 1e-8


class UsageError(ValueError):
    """Bad flags, malformed files, or an invalid sweep spec."""


class NoSignChange(ValueError):
    """Threshold bracket does not straddle the separatrix."""


@dataclass(frozen=True)
class Axis:
    param: str
    start: float
    stop: float
    count: int


@dataclass(frozen=True)
class SweepSpec:
    """A grid over (d, r, nbar, ell) with an optional explicit channel."""

    fixed: dict
    axes: tuple
    channel: FiberParams | None = None

    def __post_init__(self):
        if not self.axes:
            raise UsageError("sweep spec needs at least one axis")
        for ax in self.axes:
            if ax.param not in SWEEP_PARAMS:
                raise UsageError(f"unknown sweep parameter {ax.param!r}")
            if ax.count < 2:
                raise UsageError("each axis needs count >= 2")
        for name in self.fixed:
            if name not in SWEEP_PARAMS:
                raise UsageError(f"unknown fixed parameter {name!r}")
        if self.channel is not None and (
                "ell" in self.fixed
                or any(ax.param == "ell" for ax in self.axes)):
            raise UsageError("give either an explicit channel or ell, not both")

    @classmethod
    def from_json_file(cls, path):
        with open(path) as fh:
            try:
                raw = json.load(fh)
            except json.JSONDecodeError as exc:
                raise UsageError(
                    f"{path}: line {exc.lineno}: {exc.msg}") from exc
        try:
            axes = tuple(Axis(str(p), float(a), float(b), int(n))
                         for p, a, b, n in raw.get("axes", []))
            fixed = {str(k): float(v)
                     for k, v in raw.get("fixed", {}).items()}
            channel = None
            if "channel" in raw and raw["channel"] is not None:
                ch = raw["channel"]
                if "t1" in ch or "t2" in ch:
                    channel = FiberParams(float(ch.get("t1", 1.0)),
                                          float(ch.get("t2", 1.0)),
                                          float(ch.get("ell", 0.0)))
                else:
                    channel = FiberParams.asymmetric(float(ch["ell"]))
        except (TypeError, ValueError, KeyError) as exc:
            raise UsageError(f"{path}: bad sweep spec: {exc}") from exc
        return cls(fixed, axes, channel)

    def grid(self):
        """Row-major iteration over the axes, first axis slowest."""
        values = [np.linspace(ax.start, ax.stop, ax.count) for ax in self.axes]
        for combo in itertools.product(*values):
            point = dict(self.fixed)
            point.update({ax.param: float(v)
                          for ax, v in zip(self.axes, combo)})
            yield point


def pipeline_state(point, channel=None):
    """StandardFormParams of the crystal + fiber pipeline at one point."""
    missing = [k for k in ("d", "r", "nbar") if k not in point]
    if missing:
        raise UsageError(f"sweep point is missing {', '.join(missing)}")
    sp = tmtss(TmtssParams(point["d"], point["r"], point["nbar"]))
    fiber = channel if channel is not None \
        else FiberParams.asymmetric(point.get("ell", 0.0))
    return lossy_fiber(sp, fiber), fiber


def evaluate_point(point, channel=None):
    sp, fiber = pipeline_state(point, channel)
    knobs = {"d": point.get("d"), "r": point.get("r"),
             "nbar": point.get("nbar"), "ell": fiber.ell}
    return analyze(build_standard_cm(sp), knobs)


def run_sweep(spec: SweepSpec):
    return [evaluate_point(point, spec.channel) for point in spec.grid()]


def bisect_separatrix(f, lo, hi):
    """Bisection root of a separability interval with guaranteed
    bracketing; stops at |f| <= 1e-10 or bracket width <= 1e-8."""
    flo, fhi = f(lo), f(hi)
    if abs(flo) <= BISECT_F_TOL:
        return lo
    if abs(fhi) <= BISECT_F_TOL:
        return hi
    if (flo < 0) == (fhi < 0):
        raise NoSignChange(
            f"no sign change over [{format_number(lo)}, {format_number(hi)}]"
            f": f = {format_number(flo)}, {format_number(fhi)}")
    while hi - lo > BISECT_X_TOL:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) <= BISECT_F_TOL:
            return mid
        if (fm < 0) == (fhi < 0):
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def load_cm_json(path) -> CovarianceMatrix:
    """Read a CM from JSON: standard-form fields or explicit matrix."""
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    try:
        kind = raw["format"]
        if kind == "standard":
            sp = StandardFormParams(float(raw["n1"]), float(raw["n2"]),
                                    float(raw["ms"]), float(raw["mc"]))
            return build_standard_cm(sp)
        if kind == "matrix":
            re = np.array(raw["re"], dtype=float)
            im = np.array(raw["im"], dtype=float)
            return CovarianceMatrix(re + 1j * im)
        raise UsageError(f"{path}: unknown CM format {kind!r}")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"{path}: bad CM object: {exc}") from exc


def _append_csv_row(path, rec):
    import os
    line = ",".join(to_csv_row(rec))
    if not os.path.exists(path):
        with open(path, "w", newline="") as fh:
            fh.write(",".join(CSV_COLUMNS) + "\n" + line + "\n")
    else:
        with open(path, "a", newline="") as fh:
            fh.write(line + "\n")


def cmd_analyze(args):
    sources = sum([args.cm is not None, args.tmtss, args.n1 is not None])
    if sources != 1:
        raise UsageError(
            "give exactly one state source: --cm, --tmtss, or --n1/--n2")
    if args.cm is not None:
        if args.ell is not None:
            raise UsageError("--ell applies only to standard-form sources")
        rec = analyze(load_cm_json(args.cm))
    elif args.tmtss:
        for name in ("d", "r", "nbar"):
            if getattr(args, name) is None:
                raise UsageError(f"--tmtss needs -d, -r and --nbar")
        point = {"d": args.d, "r": args.r, "nbar": args.nbar,
                 "ell": args.ell if args.ell is not None else 0.0}
        rec = evaluate_point(point)
    else:
        if args.n2 is None:
            raise UsageError("--n1 requires --n2 (and optional --ms/--mc)")
        sp = StandardFormParams(args.n1, args.n2, args.ms, args.mc)
        knobs = {}
        if args.ell is not None:
            sp = lossy_fiber(sp, FiberParams.asymmetric(args.ell))
            knobs["ell"] = args.ell
        rec = analyze(build_standard_cm(sp), knobs)
    print(to_json(rec))
    if args.out:
        _append_csv_row(args.out, rec)
    return 0


def cmd_sweep(args):
    if not args.spec:
        raise UsageError("sweep needs --spec <json-path>")
    if not args.out:
        raise UsageError("sweep needs --out <csv-path>")
    spec = SweepSpec.from_json_file(args.spec)
    write_csv(args.out, run_sweep(spec))
    return 0


def cmd_threshold(args):
    if args.axis not in SWEEP_PARAMS:
        raise UsageError(f"unknown threshold axis {args.axis!r}")
    fixed = {}
    for name in ("d", "r", "nbar", "ell"):
        val = getattr(args, name)
        if val is not None:
            fixed[name] = val
    fixed.setdefault("ell", 0.0)

    def f(x):
        point = dict(fixed)
        point[args.axis] = x
        sp, _ = pipeline_state(point)
        return interval_separability(local_invariants(build_standard_cm(sp)))

    root = bisect_separatrix(f, args.lo, args.hi)
    print(format_number(root))
    return 0


def cmd_proptest(args):
    if args.cases < 1:
        raise UsageError("--cases must be at least 1")
    results = run_all(args.seed, args.cases)
    sys.stdout.write(format_report(args.seed, args.cases, results))
    return 0 if all(r.passed for r in results) else 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    parser = _Parser(prog="gausscone",
                     description="two-mode Gaussian state analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_state_flags(p, with_out=True):
        p.add_argument("--tmtss", action="store_true",
                       help="squeezed-thermal crystal source")
        p.add_argument("-d", type=float, help="crystal dissipation")
        p.add_argument("-r", type=float, help="crystal squeezing")
        p.add_argument("--nbar", type=float, help="thermal occupation")
        p.add_argument("--ell", type=float,
                       help="asymmetric fiber length (t1=1, t2=exp(-ell))")
        p.add_argument("--n1", type=float, help="standard-form n1")
        p.add_argument("--n2", type=float, help="standard-form n2")
        p.add_argument("--ms", type=float, default=0.0)
        p.add_argument("--mc", type=float, default=0.0)
        p.add_argument("--cm", metavar="JSON", help="CM JSON file")
        if with_out:
            p.add_argument("--out", metavar="CSV",
                           help="append the record to this CSV")

    pa = sub.add_parser("analyze", help="report on a single state")
    add_state_flags(pa)
    pa.set_defaults(func=cmd_analyze)

    ps = sub.add_parser("sweep", help="parameter-grid CSV")
    ps.add_argument("--spec", metavar="JSON", help="sweep spec file")
    ps.add_argument("--out", metavar="CSV", help="output CSV path")
    ps.set_defaults(func=cmd_sweep)

    pt = sub.add_parser("threshold",
                        help="bisect the separability boundary")
    pt.add_argument("axis", choices=SWEEP_PARAMS)
    pt.add_argument("lo", type=float)
    pt.add_argument("hi", type=float)
    pt.add_argument("-d", type=float)
    pt.add_argument("-r", type=float)
    pt.add_argument("--nbar", type=float)
    pt.add_argument("--ell", type=float)
    pt.set_defaults(func=cmd_threshold)

    pp = sub.add_parser("proptest", help="run the property suites")
    pp.add_argument("--seed", type=int, default=42)
    pp.add_argument("--cases", type=int, default=1000)
    pp.set_defaults(func=cmd_proptest)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NoSignChange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UnphysicalState as exc:
        print(f"error: unphysical state: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
