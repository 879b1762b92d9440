"""Oracle-equivalence sweep over random and degenerate integer point sets."""

import random
from dataclasses import dataclass

from .pipeline import equad_hull
from .pointgen import GenSpec, generate, write_points
from .reference import ORACLE_MAX_POINTS, graham_scan, jarvis_march, monotone_chain, oracle_hull

# looked up at call time, so tests can swap in a broken entry
ALGORITHMS = {
    "equad": equad_hull,
    "graham": graham_scan,
    "monotone": monotone_chain,
    "jarvis": jarvis_march,
}

GRID = 1000


def _rect(rng, n):
    return generate(GenSpec("rect", n, rng.getrandbits(64), grid=GRID))


def _disk(rng, n):
    return generate(GenSpec("disk", n, rng.getrandbits(64), grid=GRID))


def _small_grid(rng, n):
    # a 6x6 lattice: lots of collinear triples and repeats
    return [(rng.randrange(6), rng.randrange(6)) for _ in range(n)]


def _collinear(rng, n):
    dx, dy = rng.randint(-5, 5), rng.randint(-5, 5)
    if dx == dy == 0:
        dx = 1
    ox, oy = rng.randint(-100, 100), rng.randint(-100, 100)
    return [(ox + t * dx, oy + t * dy) for t in (rng.randint(-50, 50) for _ in range(n))]


def _duplicates(rng, n):
    base = [(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(rng.randint(1, 5))]
    return [rng.choice(base) for _ in range(n)]


def _coincident(rng, n):
    p = (rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
    return [p] * n


FAMILIES = {
    "rect": _rect,
    "disk": _disk,
    "grid": _small_grid,
    "collinear": _collinear,
    "duplicates": _duplicates,
    "coincident": _coincident,
}


def instances(trials, n_max, seed=0, families=None):
    """Yield ``(family, points)``; families take turns, sizes are uniform in
    [1, n_max]."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    names = list(families or FAMILIES)
    rng = random.Random(seed)
    for i in range(trials):
        fam = names[i % len(names)]
        n = rng.randint(1, n_max)
        yield fam, [tuple(p) for p in FAMILIES[fam](rng, n)]


@dataclass
class Mismatch:
    trial: int
    family: str
    algorithm: str
    points: list
    expected: list
    got: object


@dataclass
class SweepResult:
    instances: int
    checks: int
    mismatches: int
    first: Mismatch | None = None
    repro_path: str | None = None

    @property
    def ok(self):
        return self.mismatches == 0


def oracle_sweep(trials, n_max, seed=0, algorithms=None, repro_path="validate_repro.txt"):
    """Compare every algorithm against the brute-force oracle.

    The first disagreement (or exception) is written to ``repro_path`` as a
    point file; pass None to skip that.
    """
    if n_max > ORACLE_MAX_POINTS:
        raise ValueError(f"n_max {n_max} exceeds the oracle bound {ORACLE_MAX_POINTS}")
    names = list(algorithms or ALGORITHMS)
    result = SweepResult(0, 0, 0)
    for t, (fam, pts) in enumerate(instances(trials, n_max, seed)):
        result.instances += 1
        expected = [tuple(p) for p in oracle_hull(pts)]
        for name in names:
            result.checks += 1
            try:
                got = [tuple(p) for p in ALGORITHMS[name](pts)]
            except Exception as exc:  # noqa: BLE001 - a crash is a mismatch too
                got = exc
            if got == expected:
                continue
            result.mismatches += 1
            if result.first is None:
                result.first = Mismatch(t, fam, name, pts, expected, got)
                if repro_path is not None:
                    write_points(repro_path, pts,
                                 f"mismatch: {name} on trial {t} ({fam}), seed {seed}\n"
                                 f"expected {expected}\ngot {got!r}")
                    result.repro_path = str(repro_path)
    return result
