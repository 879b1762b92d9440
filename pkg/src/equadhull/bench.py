"""Paired timing runs of the four hull algorithms over generated inputs.

Every (distribution, n, sample) cell generates one point set and times all
requested algorithms on that same set. Only the hull call is timed;
generation and I/O are outside the clock, and the garbage collector is off
inside the timed region (as ``timeit`` does).
"""

import csv
import gc
import statistics
import time
from dataclasses import dataclass, field

from .pipeline import equad_hull
from .pointgen import Distribution, GenSpec, generate, splitmix64
from .reference import TimeBudgetExceeded, graham_scan, jarvis_march, monotone_chain

ALGORITHMS = {
    "equad": equad_hull,
    "graham": graham_scan,
    "monotone": monotone_chain,
    "jarvis": jarvis_march,
}

# column order of the timing tables
TABLE_ORDER = ("monotone", "jarvis", "graham", "equad")
CSV_HEADER = ("algorithm", "distribution", "n", "sample", "elapsed_ns", "hull_size")
TIMEOUT = "TIMEOUT"

_DIST_CODE = {Distribution.RECT: 1, Distribution.DISK: 2}


class BenchConfigError(ValueError):
    pass


@dataclass
class BenchConfig:
    algorithms: tuple = ("equad", "graham", "monotone", "jarvis")
    sizes: tuple = (10_000, 50_000, 100_000)
    distributions: tuple = (Distribution.RECT, Distribution.DISK)
    samples: int = 25
    warmups: int = 2
    seed: int = 0
    # gift wrapping gets cut off past this many seconds per run
    jarvis_budget_s: float | None = 120.0
    grid: int | None = None

    def validate(self):
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown or not self.algorithms:
            raise BenchConfigError(f"unknown algorithms: {unknown or 'none given'}")
        if not self.sizes or any(not isinstance(n, int) or n < 1 for n in self.sizes):
            raise BenchConfigError(f"sizes must be positive integers: {self.sizes}")
        try:
            dists = [Distribution(d) for d in self.distributions]
        except ValueError as exc:
            raise BenchConfigError(str(exc)) from None
        if not dists:
            raise BenchConfigError("no distributions given")
        if self.samples < 1 or self.warmups < 0:
            raise BenchConfigError("samples must be >= 1 and warmups >= 0")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    distribution: str
    n: int
    sample: int
    elapsed_ns: int
    hull_size: int | None
    timed_out: bool = False

    def row(self):
        h = TIMEOUT if self.timed_out else self.hull_size
        return (self.algorithm, self.distribution, self.n, self.sample, self.elapsed_ns, h)


def sample_seed(base: int, distribution, n: int, sample: int) -> int:
    cell = splitmix64(splitmix64(splitmix64(_DIST_CODE[Distribution(distribution)]) ^ n) ^ sample)
    return splitmix64(base ^ cell)


def _timed(fn, points, budget_ns):
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        try:
            hull = fn(points) if budget_ns is None else fn(points, budget_ns=budget_ns)
        except TimeBudgetExceeded:
            return time.perf_counter_ns() - t0, None
        # perf_counter_ns can read 0 for trivially small inputs
        return max(1, time.perf_counter_ns() - t0), hull
    finally:
        if enabled:
            gc.enable()


def run_bench(config: BenchConfig, on_record=None) -> list:
    """Run the full grid; ``on_record`` sees each record as it is produced."""
    config.validate()
    records = []
    budget = None
    if config.jarvis_budget_s is not None:
        budget = int(config.jarvis_budget_s * 1e9)
    for dist in map(Distribution, config.distributions):
        for n in config.sizes:
            for sample in range(config.samples):
                seed = sample_seed(config.seed, dist, n, sample)
                points = generate(GenSpec(dist, n, seed, grid=config.grid))
                for name in config.algorithms:
                    fn = ALGORITHMS[name]
                    b = budget if fn is jarvis_march else None
                    if sample == 0:
                        for _ in range(config.warmups):
                            _timed(fn, points, b)
                    elapsed, hull = _timed(fn, points, b)
                    rec = BenchRecord(name, dist.value, n, sample, elapsed,
                                      None if hull is None else len(hull), hull is None)
                    records.append(rec)
                    if on_record is not None:
                        on_record(rec)
                del points
    return records


def write_csv(records, fh, header=True):
    w = csv.writer(fh, lineterminator="\n")
    if header:
        w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.row())


def read_csv(fh) -> list:
    out = []
    reader = csv.reader(fh)
    head = next(reader)
    if tuple(head) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {head}")
    for algo, dist, n, sample, elapsed, h in reader:
        timed_out = h == TIMEOUT
        out.append(BenchRecord(algo, dist, int(n), int(sample), int(elapsed),
                               None if timed_out else int(h), timed_out))
    return out


@dataclass
class Summary:
    algorithm: str
    distribution: str
    n: int
    count: int
    mean_ns: float
    median_ns: float
    stddev_ns: float
    timeouts: int = 0
    elapsed: list = field(default_factory=list, repr=False)


def summarize(records) -> list:
    """Mean, median and sample standard deviation per (algorithm,
    distribution, n), sorted by that key. Timed-out runs are counted but
    left out of the statistics."""
    if not records:
        raise ValueError("nothing to summarize")
    groups = {}
    for r in records:
        groups.setdefault((r.algorithm, r.distribution, r.n), []).append(r)
    out = []
    for (algo, dist, n), recs in sorted(groups.items()):
        times = [r.elapsed_ns for r in recs if not r.timed_out]
        timeouts = len(recs) - len(times)
        if times:
            mean = statistics.fmean(times)
            median = statistics.median(times)
            sd = statistics.stdev(times) if len(times) > 1 else 0.0
        else:
            mean = median = sd = float("nan")
        out.append(Summary(algo, dist, n, len(recs), mean, median, sd, timeouts, times))
    return out


def _lookup(summary):
    return {(s.algorithm, s.distribution, s.n): s for s in summary}


def format_table(summary, distribution) -> str:
    """Mean seconds with sizes as rows and algorithms as columns."""
    rows = [s for s in summary if s.distribution == distribution]
    if not rows:
        return ""
    algos = [a for a in TABLE_ORDER if any(s.algorithm == a for s in rows)]
    sizes = sorted({s.n for s in rows})
    by_key = _lookup(rows)
    lines = [f"{distribution}: mean running time (s)",
             "\t".join(["n"] + algos)]
    for n in sizes:
        cells = [f"{n:,}"]
        for a in algos:
            s = by_key.get((a, distribution, n))
            if s is None:
                cells.append("-")
            elif s.timeouts and s.timeouts == s.count:
                cells.append(TIMEOUT)
            else:
                cells.append(f"{s.mean_ns / 1e9:.3f}" + ("*" if s.timeouts else ""))
        lines.append("\t".join(cells))
    return "\n".join(lines)


@dataclass
class Check:
    name: str
    ratio: float
    expected: str
    ok: bool

    def line(self):
        status = "ok" if self.ok else "FLAG"
        return f"[{status}] {self.name}: ratio={self.ratio:.3f} (expected {self.expected})"


def ordering_checks(summary) -> list:
    """Expected relative orderings, evaluated at the largest size where
    both algorithms have data."""
    by_key = _lookup(summary)
    checks = []

    def largest(a, b, dist):
        ns = [n for (al, d, n) in by_key if al == a and d == dist
              and (b, dist, n) in by_key
              and by_key[(a, dist, n)].timeouts == 0 and by_key[(b, dist, n)].timeouts == 0]
        return max(ns) if ns else None

    def add(a, b, dist, test, expected):
        n = largest(a, b, dist)
        if n is None:
            return
        ratio = by_key[(a, dist, n)].mean_ns / by_key[(b, dist, n)].mean_ns
        checks.append(Check(f"{a}/{b} {dist} n={n}", ratio, expected, test(ratio)))

    add("jarvis", "monotone", "disk", lambda r: r >= 3.0, ">= 3")
    add("equad", "jarvis", "disk", lambda r: r < 1.0, "< 1")
    add("equad", "monotone", "rect", lambda r: r < 1.0, "< 1")
    return checks


def report(summary) -> str:
    parts = [format_table(summary, d.value) for d in Distribution]
    parts = [p for p in parts if p]
    checks = ordering_checks(summary)
    if checks:
        parts.append("\n".join(c.line() for c in checks))
    return "\n\n".join(parts)
