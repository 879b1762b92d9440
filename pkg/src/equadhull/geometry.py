"""Planar primitives and orientation predicates.

Predicates are evaluated with plain arithmetic on the coordinate values.
Python integers never overflow, so integer coordinates give exact answers at
any magnitude; floats get ordinary double rounding.
"""

import math
from enum import IntEnum
from typing import Iterable, NamedTuple, Sequence


class GeometryError(ValueError):
    """Raised for inputs the predicates cannot work with (empty or non-finite)."""


class Point(NamedTuple):
    x: float
    y: float


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class Aabb(NamedTuple):
    lo: Point
    hi: Point


def cross(a, b, c):
    """Twice the signed area of triangle abc (positive for a left turn)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orient(a, b, c) -> Orientation:
    if not all(map(math.isfinite, (a[0], a[1], b[0], b[1], c[0], c[1]))):
        raise GeometryError(f"non-finite coordinate in {a}, {b}, {c}")
    d = cross(a, b, c)
    if d > 0:
        return Orientation.CCW
    if d < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def distinct_cycle(vertices: Sequence) -> tuple:
    """Drop consecutive duplicates from a closed vertex cycle."""
    out = []
    for v in vertices:
        if not out or v != out[-1]:
            out.append(v)
    while len(out) > 1 and out[-1] == out[0]:
        out.pop()
    return tuple(out)


def quad_edge_terms(cycle):
    """Origins then directions of the cycle's edges, always four of each.
    A triangle repeats its first edge; padding with a repeated vertex would
    add a zero-length edge that nothing is strictly inside of."""
    m = len(cycle)
    origins = [cycle[i] for i in range(m)]
    dirs = [(cycle[(i + 1) % m][0] - cycle[i][0], cycle[(i + 1) % m][1] - cycle[i][1])
            for i in range(m)]
    if m == 3:
        origins.append(origins[0])
        dirs.append(dirs[0])
    return (*origins, *dirs)


def strictly_inside_quad(p, quad) -> bool:
    """True when p is strictly left of every edge of the quad's CCW cycle.

    ``quad`` is either an object with a ``cycle`` attribute (an e-Quad) or a
    sequence of vertices. Cycles with fewer than three distinct vertices have
    no interior.
    """
    cycle = getattr(quad, "cycle", None)
    if cycle is None:
        cycle = distinct_cycle(quad)
    if len(cycle) < 3:
        return False
    px, py = p[0], p[1]
    a = cycle[-1]
    for b in cycle:
        if (b[0] - a[0]) * (py - a[1]) - (b[1] - a[1]) * (px - a[0]) <= 0:
            return False
        a = b
    return True


def compute_aabb(points: Iterable) -> Aabb:
    points = list(points)
    if not points:
        raise GeometryError("bounding box of an empty point set")
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return Aabb(Point(min(xs), min(ys)), Point(max(xs), max(ys)))


def check_finite(points: Sequence) -> None:
    # a finite total proves every coordinate finite; overflow falls through
    try:
        if math.isfinite(sum(map(sum, points))):
            return
    except OverflowError:
        pass
    for i, p in enumerate(points):
        if not (math.isfinite(p[0]) and math.isfinite(p[1])):
            raise GeometryError(f"point {i} has a non-finite coordinate: {tuple(p)}")
