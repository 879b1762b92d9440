"""Recursive peeling of e-Quads off a dual-sorted point set.

Each generation takes the four directional extremes of the points still
active. While looking for them, candidates lying strictly inside the
previous e-Quad are thrown away on the spot; only the immediately preceding
e-Quad is used for that test.
"""

from typing import NamedTuple

from .geometry import distinct_cycle, quad_edge_terms
from .preprocess import SortedPointSet, Tag

_DISCARDED = Tag.DISCARDED_INTERIOR
_CONSUMED = Tag.CONSUMED_AS_VERTEX


class EQuad(NamedTuple):
    xmin: tuple
    ymin: tuple
    xmax: tuple
    ymax: tuple
    # positions of the four vertices in SortedPointSet.points
    ids: tuple
    generation: int
    # CCW cycle xmin -> ymin -> xmax -> ymax without repeated vertices
    cycle: tuple

    @property
    def vertices(self):
        return self[:4]

    @classmethod
    def from_vertices(cls, xmin, ymin, xmax, ymax, ids=(-1, -1, -1, -1), generation=0):
        return cls(xmin, ymin, xmax, ymax, tuple(ids), generation,
                   _cycle(xmin, ymin, xmax, ymax))


def _cycle(a, b, c, d):
    if a != b and b != c and c != d and d != a:
        return (a, b, c, d)
    return distinct_cycle((a, b, c, d))


def next_equad(sps: SortedPointSet, last: EQuad | None = None,
               generation: int | None = None) -> EQuad | None:
    """Extract the next e-Quad, or None once every point is settled.

    Scans run X_min (front of by_x), X_max (back of by_x), Y_min, Y_max.
    Every active point a scan passes over that lies strictly inside ``last``
    is tagged discarded. The four winners stay active until all scans are
    done, so a lone remaining point fills all four slots. Cursors live on
    the set and only move inward.
    """
    points, state = sps.points, sps.state
    by_x, by_y = sps.by_x, sps.by_y
    cur = sps.cursors
    n = len(points)

    cycle = () if last is None else last.cycle
    test = len(cycle) >= 3
    if test:
        (x0, y0), (x1, y1), (x2, y2), (x3, y3), (u0, v0), (u1, v1), (u2, v2), (u3, v3) = \
            quad_edge_terms(cycle)

    discarded = 0
    for order, ci, step in ((by_x, 0, 1), (by_x, 1, -1), (by_y, 2, 1), (by_y, 3, -1)):
        i = cur[ci]
        while 0 <= i < n:
            k = order[i]
            if state[k]:
                i += step
                continue
            if test:
                x, y = points[k]
                if (u0 * (y - y0) - v0 * (x - x0) > 0
                        and u1 * (y - y1) - v1 * (x - x1) > 0
                        and u2 * (y - y2) - v2 * (x - x2) > 0
                        and u3 * (y - y3) - v3 * (x - x3) > 0):
                    state[k] = _DISCARDED
                    discarded += 1
                    i += step
                    continue
            break
        cur[ci] = i
        if not 0 <= i < n:
            # only the first scan can run dry; then nothing is left at all
            sps.scan_discards += discarded
            return None
    sps.scan_discards += discarded

    ids = (by_x[cur[0]], by_y[cur[2]], by_x[cur[1]], by_y[cur[3]])
    for k in ids:
        state[k] = _CONSUMED
    if generation is None:
        generation = 0 if last is None else last.generation + 1
    a, b, c, d = points[ids[0]], points[ids[1]], points[ids[2]], points[ids[3]]
    return EQuad(a, b, c, d, ids, generation, _cycle(a, b, c, d))


def build_all_equads(sps: SortedPointSet, trace=None) -> list:
    """Peel e-Quads until no active point remains.

    ``trace``, when given, is called as ``trace(equad, discarded)`` once per
    generation with the number of points that generation's scans discarded;
    a final ``trace(None, discarded)`` reports discards of the last, empty
    scan.
    """
    quads = []
    last = None
    if trace is None:
        while True:
            last = next_equad(sps, last, len(quads))
            if last is None:
                return quads
            quads.append(last)
    while True:
        before = sps.scan_discards
        last = next_equad(sps, last, len(quads))
        trace(last, sps.scan_discards - before)
        if last is None:
            return quads
        quads.append(last)
