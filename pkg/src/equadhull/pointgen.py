"""Seeded uniform point sets in a rectangle or a disk, and the point file
format.

Random numbers come from a splitmix64 counter stream: draw ``i`` of seed
``s`` is ``mix(s + (i + 1) * GOLDEN)``, turned into a 53-bit uniform in
[0, 1). Disk points are rejection-sampled from the bounding square, so the
output depends only on integer and IEEE arithmetic and is bit-identical
everywhere.
"""

import math
import re
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .geometry import Point

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MAX_GRID = 1 << 26
DISK_MAX_ATTEMPTS = 64


class Distribution(str, Enum):
    RECT = "rect"
    DISK = "disk"


class GenSpecError(ValueError):
    pass


class PointFileError(ValueError):
    def __init__(self, message, lineno=None):
        super().__init__(message if lineno is None else f"line {lineno}: {message}")
        self.lineno = lineno


def splitmix64(x: int) -> int:
    """One splitmix64 step: advance the state by the golden gamma and mix."""
    z = (x + GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _draws(seed: int, start: int, count: int) -> np.ndarray:
    """Draws start..start+count-1 of the stream as uint64."""
    with np.errstate(over="ignore"):
        i = np.arange(start + 1, start + count + 1, dtype=np.uint64)
        z = np.uint64(seed) + i * np.uint64(GOLDEN)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def uniforms(seed: int, start: int, count: int) -> np.ndarray:
    return (_draws(seed, start, count) >> np.uint64(11)).astype(np.float64) * 2.0 ** -53


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    With ``grid`` unset, coordinates are floats inside ``lo``/``hi`` (rect)
    or within ``radius`` of ``center`` (disk). With ``grid = G`` they are
    integers: the rect becomes [0, G)^2 and the disk has radius G around the
    origin, ignoring the float bounds. Integer sets make every predicate
    exact.
    """

    distribution: Distribution
    n: int
    seed: int = 0
    lo: tuple = (0.0, 0.0)
    hi: tuple = (1.0, 1.0)
    center: tuple = (0.0, 0.0)
    radius: float = 1.0
    grid: int | None = None

    def validate(self):
        try:
            Distribution(self.distribution)
        except ValueError:
            raise GenSpecError(f"unknown distribution {self.distribution!r}") from None
        if not isinstance(self.n, int) or self.n < 0:
            raise GenSpecError(f"n must be a non-negative integer, got {self.n!r}")
        if self.grid is not None:
            if not isinstance(self.grid, int) or not 1 <= self.grid <= MAX_GRID:
                raise GenSpecError(f"grid must be an integer in [1, 2^26], got {self.grid!r}")
            return
        vals = (*self.lo, *self.hi, *self.center, self.radius)
        if not all(math.isfinite(v) for v in vals):
            raise GenSpecError("bounds must be finite")
        if self.distribution == Distribution.RECT and not (
                self.lo[0] < self.hi[0] and self.lo[1] < self.hi[1]):
            raise GenSpecError(f"empty rectangle {self.lo} .. {self.hi}")
        if self.distribution == Distribution.DISK and not self.radius > 0:
            raise GenSpecError(f"radius must be positive, got {self.radius}")


def _rect(spec):
    u = uniforms(spec.seed, 0, 2 * spec.n)
    ux, uy = u[0::2], u[1::2]
    if spec.grid is not None:
        g = spec.grid
        # u * g can round up to g itself near the top of [0, 1)
        return (np.minimum(np.floor(ux * g), g - 1).astype(np.int64),
                np.minimum(np.floor(uy * g), g - 1).astype(np.int64))
    (x0, y0), (x1, y1) = spec.lo, spec.hi
    return x0 + ux * (x1 - x0), y0 + uy * (y1 - y0)


def _disk(spec):
    n = spec.n
    if spec.grid is not None:
        g = spec.grid

        def candidates(u):
            return np.floor(u * (2 * g + 1)).astype(np.int64) - g
        r2 = g * g
    else:
        r = float(spec.radius)

        def candidates(u):
            return (2.0 * u - 1.0) * r
        r2 = r * r

    xs, ys, accepted = [], [], []
    attempts = 0
    found = 0
    while found < n:
        batch = max(64, int((n - found) * 1.35) + 64)
        u = uniforms(spec.seed, 2 * attempts, 2 * batch)
        dx, dy = candidates(u[0::2]), candidates(u[1::2])
        ok = dx * dx + dy * dy <= r2
        idx = np.flatnonzero(ok)[: n - found]
        xs.append(dx[idx])
        ys.append(dy[idx])
        accepted.append(idx + attempts)
        found += len(idx)
        attempts += batch
    xs, ys = np.concatenate(xs), np.concatenate(ys)
    gaps = np.diff(np.concatenate(([-1], np.concatenate(accepted))))
    if len(gaps) and gaps.max() > DISK_MAX_ATTEMPTS:
        raise GenSpecError(
            f"disk sampling needed {int(gaps.max())} attempts for one point "
            f"(cap {DISK_MAX_ATTEMPTS})")
    if spec.grid is not None:
        return xs, ys
    cx, cy = spec.center
    return cx + xs, cy + ys


def generate(spec: GenSpec) -> list:
    spec.validate()
    if spec.n == 0:
        return []
    spec = GenSpec(Distribution(spec.distribution), spec.n, spec.seed & MASK64,
                   spec.lo, spec.hi, spec.center, spec.radius, spec.grid)
    xs, ys = _rect(spec) if spec.distribution == Distribution.RECT else _disk(spec)
    return list(map(Point._make, zip(xs.tolist(), ys.tolist())))


def format_coord(v) -> str:
    return str(v) if isinstance(v, int) else repr(float(v))


def write_points(path, points, comment=None):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        fh.writelines(f"{format_coord(p[0])} {format_coord(p[1])}\n" for p in points)


_INT = re.compile(r"[+-]?\d+\Z")


def parse_coord(token: str, lineno=None):
    if _INT.match(token):
        return int(token)
    try:
        v = float(token)
    except ValueError:
        raise PointFileError(f"not a number: {token!r}", lineno) from None
    if not math.isfinite(v):
        raise PointFileError(f"non-finite coordinate {token!r}", lineno)
    return v


def read_points(path) -> list:
    points = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise PointFileError(f"expected 2 numbers, got {len(parts)}", lineno)
            points.append(Point(parse_coord(parts[0], lineno), parse_coord(parts[1], lineno)))
    return points
