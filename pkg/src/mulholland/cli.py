"""``mulholland`` command-line front end.

Exit codes: 0 success or satisfied, 1 a check was violated, 2 bad input or
other error.
"""

import argparse
import json
import sys
import time
import warnings

import numpy as np

from . import io
from .dirlimit import direct_limit_norm, limit_local_boundedness_probe
from .envelope import envelope_exponent, envelope_hull_check, envelope_norm
from .fnorm import unit_sphere_contour
from .orlicz import (DegenerateYoungError, L1Polygon, luxemburg_norm, ngamma_norm,
                     orlicz_norm)
from .verify import SUITES, CheckRecord, RunReport, run_suites
from .youngfn import ConjugateYoung, check_delta2, check_mulholland, inverse_young

EXIT_OK, EXIT_VIOLATED, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _fmt(v):
    return f"{v:.15g}"


def _emit(report, args):
    if args.json:
        text = json.dumps(report.as_dict(), indent=2, default=str)
    else:
        lines = [f"# {report.command}  seed={report.seed}"]
        lines += [f"warning: {w}" for w in report.warnings]
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name} observed={_fmt(c.observed)} tol={_fmt(c.tolerance)}"
            if c.trials != 1:
                line += f" trials={c.trials}"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
            if c.witness is not None:
                lines.append(f"     witness: {json.dumps(c.witness, default=str)}")
        lines.append(f"{'PASS' if report.passed else 'FAIL'} "
                     f"{sum(c.passed for c in report.checks)}/{len(report.checks)} checks"
                     f"  wall_time={report.wall_time:.2f}s")
        text = "\n".join(lines)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)


def cmd_eval(args):
    phi = io.load_young(args.spec)
    t = args.t
    if args.mode == "value":
        v = phi(t)
    elif args.mode == "inverse":
        v = inverse_young(phi, t)
    else:
        if t < 0:
            raise CliError("conjugate is evaluated at t >= 0 (it is even)")
        v = ConjugateYoung(phi)(t)
    print(_fmt(v))
    return EXIT_OK


def cmd_check(args):
    phi = io.load_young(args.spec)
    if args.conjugate:
        phi = ConjugateYoung(phi)
    start = time.perf_counter()
    label = f"{args.which}{'[conjugate]' if args.conjugate else ''}"
    if args.which == "delta2":
        slope_tol = args.tol if args.tol is not None else 0.01
        rep = check_delta2(phi, args.t_min, args.t_max, args.grid, slope_tol=slope_tol)
        note = (f"observed = sup ratio at t={_fmt(rep.witness)}, knee={_fmt(rep.knee)}, "
                f"tol applies to tail log-log slope {rep.tail_slope:.3g}; sampled, not proved")
        rec = CheckRecord(label, rep.satisfied, rep.constant, slope_tol, args.grid,
                          None if rep.satisfied else {"t": rep.witness}, note)
    else:
        rtol = args.tol if args.tol is not None else 1e-9
        rep = check_mulholland(phi, args.s_min, args.s_max, args.grid, rtol=rtol)
        rec = CheckRecord(label, rep.satisfied, rep.min_second_difference, rtol, args.grid,
                          None if rep.satisfied else {"s": rep.witness},
                          "observed = min second difference of log phi(e^s); sampled")
    report = RunReport(command=args.argv, seed=args.seed, checks=[rec])
    report.wall_time = time.perf_counter() - start
    _emit(report, args)
    return EXIT_OK if report.passed else EXIT_VIOLATED


def cmd_contour(args):
    if args.resolution < 8:
        raise CliError(f"resolution must be >= 8, got {args.resolution}")
    phi = io.load_young(args.spec)
    theta, pts = unit_sphere_contour(phi, args.resolution, level=args.level)
    p = envelope_exponent(phi)
    dirs = np.column_stack([np.cos(theta), np.sin(theta)])
    rad = np.array([args.level / envelope_norm(p, np.abs(d)) for d in dirs])
    env = dirs * rad[:, None]
    rows = np.column_stack([theta, pts, env])
    try:
        io.write_csv(args.out, ["theta", "s", "t", "envelope_s", "envelope_t"], rows)
    except OSError as exc:
        raise CliError(f"{args.out}: cannot write ({exc.strerror})") from None
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_envelope(args):
    phi = io.load_young(args.spec)
    rep = envelope_hull_check(phi, args.resolution, tuple(args.scales))
    print(json.dumps(rep.as_dict(), indent=2))
    return EXIT_OK if rep.non_increasing else EXIT_VIOLATED


def cmd_verify(args):
    with warnings.catch_warnings():
        # the report itself carries the warning
        warnings.simplefilter("ignore")
        report = run_suites([args.suite], args.seed, args.trials, command=args.argv)
    _emit(report, args)
    return EXIT_OK if report.passed else EXIT_VIOLATED


def cmd_orlicz(args):
    phi = io.load_young(args.spec)
    mu, funcs = io.load_measure(args.measure)
    records = []
    if args.norm in ("luxemburg", "all"):
        for j, f in enumerate(funcs):
            v, info = luxemburg_norm(phi, f, mu, full_output=True)
            records.append({"norm": "luxemburg", "function": j, "value": v, **info})
    if args.norm in ("orlicz", "all"):
        for j, f in enumerate(funcs):
            try:
                records.append({"norm": "orlicz", "function": j,
                                "value": orlicz_norm(phi, f, mu), "method": "amemiya"})
            except DegenerateYoungError as exc:
                raise CliError(str(exc)) from None
    if args.norm in ("ngamma", "all"):
        if len(funcs) != 2:
            if args.norm == "ngamma":
                raise CliError("ngamma needs a pair file with weight,f,g rows")
        else:
            v, info = ngamma_norm(L1Polygon(), phi, funcs[0], funcs[1], mu, full_output=True)
            records.append({"norm": "ngamma", "gamma": "L1Polygon", "value": v, **info})
    print(json.dumps(records, indent=2))
    return EXIT_OK


def cmd_dirlimit(args):
    ladder = io.load_ladder(args.ladder)
    if args.probe:
        rep = limit_local_boundedness_probe(ladder, args.probe, seed=args.seed)
        print(json.dumps({"ladder": ladder.name, "samples": rep.samples,
                          "bounds": {str(k): v for k, v in rep.bounds.items()},
                          "all_finite": rep.all_finite}, indent=2))
        return EXIT_OK if rep.all_finite else EXIT_VIOLATED
    if (args.seq is None) == (args.seq_file is None):
        raise CliError("give exactly one of --seq or --seq-file (or --probe N)")
    a = io.parse_sequence(args.seq) if args.seq is not None else io.load_sequence(args.seq_file)
    print(_fmt(direct_limit_norm(ladder, a)))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="mulholland", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("--spec", required=True, help="Young-function JSON file")
        p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("--out", help="also write the report to this path")

    p = sub.add_parser("eval", help="evaluate Phi, its inverse or its conjugate")
    p.add_argument("--spec", required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--mode", choices=("value", "inverse", "conjugate"), default="value")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="sampled delta2 or Mulholland-condition check")
    common(p)
    p.add_argument("--which", choices=("delta2", "mulholland"), required=True)
    p.add_argument("--conjugate", action="store_true", help="check the conjugate instead")
    p.add_argument("--t-min", type=float, default=1.0)
    p.add_argument("--t-max", type=float, default=1e9)
    p.add_argument("--s-min", type=float, default=-20.0)
    p.add_argument("--s-max", type=float, default=20.0)
    p.add_argument("--grid", type=int, default=2000)
    p.add_argument("--tol", type=float, default=None,
                   help="delta2: tail log-log slope tolerance (0.01); "
                        "mulholland: relative second-difference tolerance (1e-9)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("contour", help="F-norm and envelope unit spheres as CSV")
    p.add_argument("--spec", required=True)
    p.add_argument("--resolution", type=int, default=64, help="rays per quadrant (>= 8)")
    p.add_argument("--level", type=float, default=1.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_contour)

    p = sub.add_parser("envelope", help="hull-gauge vs envelope diagnostic (JSON)")
    p.add_argument("--spec", required=True)
    p.add_argument("--resolution", type=int, default=200)
    p.add_argument("--scales", type=float, nargs="+", default=[1.0, 10.0, 100.0, 1000.0])
    p.set_defaults(func=cmd_envelope)

    p = sub.add_parser("verify", help="run the seeded property suites")
    common(p, spec=False)
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orlicz", help="norms of CSV functions on a discrete measure")
    p.add_argument("--spec", required=True)
    p.add_argument("--measure", required=True, help="CSV with weight,value or weight,f,g rows")
    p.add_argument("--norm", choices=("luxemburg", "orlicz", "ngamma", "all"), default="all")
    p.set_defaults(func=cmd_orlicz)

    p = sub.add_parser("dirlimit", help="direct-limit norm of a finite sequence")
    p.add_argument("--ladder", default="interpolation", help="ladder name or JSON file")
    p.add_argument("--seq", help="inline list, e.g. '1,0.5,2'")
    p.add_argument("--seq-file", help="CSV file; the first row is the sequence")
    p.add_argument("--probe", type=int, default=0, help="run the local-boundedness probe")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_dirlimit)
    return parser


def main(argv=None):
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(argv)
    args.argv = " ".join(argv)
    if getattr(args, "trials", 0) < 0:
        parser.error("--trials must be >= 0")
    try:
        return args.func(args)
    except (io.SpecError, CliError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
