"""Command line: gen, hull, bench, validate, trace.

Exit codes: 0 success, 1 runtime or data error, 2 usage error.
"""

import argparse
import sys

from . import bench, validate
from .geometry import GeometryError
from .pipeline import equad_convex_hull
from .pointgen import (Distribution, GenSpec, GenSpecError, PointFileError, format_coord,
                       generate, read_points, write_points)
from .reference import ORACLE_MAX_POINTS, TimeBudgetExceeded
from .svg import MAX_TRACE_POINTS, STAGES, render_svg


class CommandError(Exception):
    """A runtime failure reported with exit code 1."""


def _int_at_least(lo):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v
    return conv


def _seed(s):
    try:
        v = int(s, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer seed: {s!r}") from None
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def _csv_list(conv, choices=None):
    def parse(s):
        items = [t.strip() for t in s.split(",") if t.strip()]
        if not items:
            raise argparse.ArgumentTypeError("empty list")
        out = []
        for t in items:
            if choices is not None and t not in choices:
                raise argparse.ArgumentTypeError(
                    f"invalid choice {t!r} (choose from {', '.join(choices)})")
            out.append(conv(t))
        return tuple(out)
    return parse


ALGO_NAMES = tuple(bench.ALGORITHMS)
DIST_NAMES = tuple(d.value for d in Distribution)


def build_parser():
    p = argparse.ArgumentParser(prog="equadhull", description="Planar convex hulls by e-Quad peeling.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    g = sub.add_parser("gen", help="write a seeded random point file")
    g.add_argument("--dist", choices=DIST_NAMES, required=True)
    g.add_argument("--n", type=_int_at_least(0), required=True)
    g.add_argument("--seed", type=_seed, default=0)
    g.add_argument("--out", required=True)
    g.add_argument("--grid", type=_int_at_least(1), default=None,
                   help="integer coordinates: [0,G)^2 for rect, radius G for disk")

    h = sub.add_parser("hull", help="compute the hull of a point file")
    h.add_argument("--algo", choices=ALGO_NAMES, default="equad")
    h.add_argument("--in", dest="input", required=True)
    h.add_argument("--out", required=True)
    h.add_argument("--stats", action="store_true", help="print run statistics as key=value lines")

    b = sub.add_parser("bench", help="time the algorithms on generated inputs")
    b.add_argument("--algos", type=_csv_list(str, ALGO_NAMES), default=ALGO_NAMES)
    b.add_argument("--sizes", type=_csv_list(_int_at_least(1)), default=(1000, 10_000, 50_000))
    b.add_argument("--dists", type=_csv_list(str, DIST_NAMES), default=DIST_NAMES)
    b.add_argument("--samples", type=_int_at_least(1), default=25)
    b.add_argument("--warmups", type=_int_at_least(0), default=2)
    b.add_argument("--seed", type=_seed, default=0)
    b.add_argument("--csv", default=None, help="stream records to this file")
    b.add_argument("--jarvis-budget", type=float, default=120.0,
                   help="seconds before a gift-wrapping run is recorded as TIMEOUT")

    v = sub.add_parser("validate", help="check every algorithm against the brute-force oracle")
    v.add_argument("--n-max", type=_int_at_least(1), default=64)
    v.add_argument("--trials", type=_int_at_least(1), default=1000)
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--repro", default="validate_repro.txt",
                   help="where the first failing point set is written")

    t = sub.add_parser("trace", help="draw one stage of an e-Quad run as SVG")
    t.add_argument("--in", dest="input", required=True)
    t.add_argument("--out-svg", required=True)
    t.add_argument("--stage", choices=STAGES, default="hull")
    return p


def _read(path):
    try:
        pts = read_points(path)
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror or exc}") from None
    if not pts:
        raise CommandError(f"{path}: no points")
    return pts


def _write_text(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CommandError(f"cannot write {path}: {exc.strerror or exc}") from None


def cmd_gen(args, out):
    spec = GenSpec(Distribution(args.dist), args.n, args.seed, grid=args.grid)
    pts = generate(spec)
    try:
        write_points(args.out, pts)
    except OSError as exc:
        raise CommandError(f"cannot write {args.out}: {exc.strerror or exc}") from None
    print(len(pts), file=out)


def cmd_hull(args, out):
    pts = _read(args.input)
    if args.algo == "equad":
        hull, stats = equad_convex_hull(pts, timing=args.stats)
        lines = stats.as_lines()
    else:
        hull = bench.ALGORITHMS[args.algo](pts)
        lines = [f"n={len(pts)}", f"hull_size={len(hull)}"]
    _write_text(args.out, "".join(f"{format_coord(p[0])} {format_coord(p[1])}\n" for p in hull))
    if args.stats:
        print("\n".join(lines), file=out)


def cmd_bench(args, out):
    cfg = bench.BenchConfig(algorithms=args.algos, sizes=args.sizes,
                            distributions=args.dists, samples=args.samples,
                            warmups=args.warmups, seed=args.seed,
                            jarvis_budget_s=args.jarvis_budget)
    fh = None
    if args.csv is not None:
        try:
            fh = open(args.csv, "w", encoding="utf-8", newline="")
        except OSError as exc:
            raise CommandError(f"cannot write {args.csv}: {exc.strerror or exc}") from None
    try:
        if fh is not None:
            bench.write_csv([], fh)

        def on_record(rec):
            if fh is not None:
                bench.write_csv([rec], fh, header=False)
                fh.flush()
        records = bench.run_bench(cfg, on_record)
    finally:
        if fh is not None:
            fh.close()
    print(bench.report(bench.summarize(records)), file=out)
    timeouts = sum(r.timed_out for r in records)
    if timeouts:
        print(f"{timeouts} run(s) hit the time budget and were recorded as {bench.TIMEOUT}", file=out)


def cmd_validate(args, out):
    res = validate.oracle_sweep(args.trials, args.n_max, args.seed, repro_path=args.repro)
    print(f"instances={res.instances} checks={res.checks} mismatches={res.mismatches}", file=out)
    if not res.ok:
        m = res.first
        print(f"first mismatch: {m.algorithm} on trial {m.trial} ({m.family}, n={len(m.points)}); "
              f"points written to {res.repro_path}", file=out)
        return 1
    return 0


def cmd_trace(args, out):
    pts = _read(args.input)
    if len(pts) > MAX_TRACE_POINTS:
        raise CommandError(f"{len(pts)} points is too many to draw (limit {MAX_TRACE_POINTS})")
    _write_text(args.out_svg, render_svg(pts, args.stage))


COMMANDS = {
    "gen": cmd_gen,
    "hull": cmd_hull,
    "bench": cmd_bench,
    "validate": cmd_validate,
    "trace": cmd_trace,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "validate" and args.n_max > ORACLE_MAX_POINTS:
        parser.error(f"--n-max may be at most {ORACLE_MAX_POINTS}")
    if args.command == "bench" and not args.jarvis_budget > 0:
        parser.error("--jarvis-budget must be positive")
    try:
        return COMMANDS[args.command](args, out) or 0
    except (CommandError, PointFileError, GeometryError, GenSpecError, TimeBudgetExceeded) as exc:
        print(f"equadhull {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
