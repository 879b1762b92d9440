"""The five-step e-Quad hull: discard, sort, peel, assemble, Melkman."""

import time
from dataclasses import dataclass, field

from .assembly import assemble_polygon, build_chains
from .equads import EQuad, build_all_equads
from .geometry import GeometryError, check_finite
from .melkman import melkman_hull
from .preprocess import Tag, discard_interior, find_extremes, quad_cycle, sort_dual


@dataclass
class HullStats:
    n: int = 0
    step1_discarded: int = 0
    scan_discarded: int = 0
    consumed: int = 0
    equads: int = 0
    polygon_size: int = 0
    hull_size: int = 0
    # seconds per stage, only filled when timing was requested
    stage_times: dict = field(default_factory=dict)

    def as_lines(self):
        lines = [f"{k}={getattr(self, k)}" for k in (
            "n", "step1_discarded", "scan_discarded", "consumed",
            "equads", "polygon_size", "hull_size")]
        for stage, secs in self.stage_times.items():
            lines.append(f"time_{stage}={secs:.6f}")
        return lines


@dataclass
class Trace:
    """Intermediate products of one run, indexed against the input list."""

    first: EQuad | None = None
    step1_discarded: list = field(default_factory=list)
    scan_discarded: list = field(default_factory=list)
    equads: list = field(default_factory=list)
    generation_discards: list = field(default_factory=list)
    chains: dict = field(default_factory=dict)
    polygon: list = field(default_factory=list)
    vertex_touches: dict = field(default_factory=dict)
    melkman_tests: int = 0


def _collinear_hull(points, survivors, first_cycle):
    """Hull when the first e-Quad has collapsed and every survivor lies on
    its line, else None."""
    if len(first_cycle) == 1:
        # leftmost-lowest equals rightmost-highest: all points coincide
        return [first_cycle[0]]
    a, b = first_cycle
    dx, dy = b[0] - a[0], b[1] - a[1]
    ax, ay = a[0], a[1]
    for i in survivors:
        x, y = points[i]
        if dx * (y - ay) - dy * (x - ax) != 0:
            return None
    return sorted(first_cycle, key=lambda p: (p[1], p[0]))


def equad_convex_hull(points, *, timing=False, trace: Trace | None = None):
    """Convex hull by the e-Quad method. Returns ``(hull, stats)``.

    ``hull`` is the canonical strictly convex CCW vertex list (see
    :mod:`equadhull.reference`). Pass a :class:`Trace` to keep the
    intermediate e-Quads, chains and polygon.
    """
    if not points:
        raise GeometryError("hull of an empty point set")
    points = points if isinstance(points, list) else list(points)
    check_finite(points)
    n = len(points)
    stats = HullStats(n=n)
    clock = time.perf_counter
    t0 = clock()

    # step 1
    quad = find_extremes(points)
    first_cycle = quad_cycle(points, quad)
    survivors, stats.step1_discarded = discard_interior(points, quad)
    if timing:
        t1 = clock()
        stats.stage_times["discard"] = t1 - t0
        t0 = t1
    if trace is not None:
        kept = set(survivors)
        trace.step1_discarded = [i for i in range(n) if i not in kept]

    if len(first_cycle) < 3:
        hull = _collinear_hull(points, survivors, first_cycle)
        if hull is not None:
            stats.consumed = len(survivors)
            stats.polygon_size = stats.hull_size = len(hull)
            if trace is not None:
                trace.polygon = list(hull)
            return hull, stats

    # step 2
    sps = sort_dual([points[i] for i in survivors], survivors)
    # step 3
    if trace is not None:
        def record(q, discarded):
            if q is not None:
                trace.generation_discards.append(discarded)
        equads = build_all_equads(sps, record)
    else:
        equads = build_all_equads(sps)
    stats.equads = len(equads)
    stats.scan_discarded = sps.scan_discards
    stats.consumed = len(survivors) - sps.scan_discards
    if timing:
        t1 = clock()
        stats.stage_times["sort_and_peel"] = t1 - t0
        t0 = t1

    # step 4
    first = equads[0]
    counts = {} if trace is not None else None
    chains = build_chains(equads, first, counts)
    polygon = assemble_polygon(chains, first)
    stats.polygon_size = len(polygon)
    if timing:
        t1 = clock()
        stats.stage_times["assemble"] = t1 - t0
        t0 = t1

    # step 5
    mstats = {} if trace is not None else None
    hull = melkman_hull(polygon, mstats)
    stats.hull_size = len(hull)
    if timing:
        stats.stage_times["melkman"] = clock() - t0

    if trace is not None:
        trace.first = first
        trace.scan_discarded = [survivors[i] for i in sps.indices_tagged(Tag.DISCARDED_INTERIOR)]
        trace.equads = equads
        trace.chains = chains
        trace.polygon = polygon
        trace.vertex_touches = {survivors[k]: v for k, v in counts.items()}
        trace.melkman_tests = mstats.get("orient_tests", 0)
    return hull, stats


def equad_hull(points):
    """Hull only, same signature as the comparator algorithms."""
    return equad_convex_hull(points)[0]
