"""Directional extremes, first-pass interior discarding and the dual sort."""

from dataclasses import dataclass, field
from enum import IntEnum
from operator import itemgetter
from typing import NamedTuple, Sequence

from .geometry import GeometryError, distinct_cycle, quad_edge_terms


class ExtremeQuadruple(NamedTuple):
    """Indices of the leftmost, bottommost, rightmost and topmost points.

    Ties are broken lexicographically: x-extremes by (x, y), y-extremes by
    (y, x). The indices may coincide for degenerate sets.
    """

    xmin: int
    ymin: int
    xmax: int
    ymax: int


class Tag(IntEnum):
    ACTIVE = 0
    CONSUMED_AS_VERTEX = 1
    DISCARDED_INTERIOR = 2


class SubRegion(IntEnum):
    NONE = 0
    R1 = 1  # leftmost / bottommost corner
    R2 = 2  # bottommost / rightmost
    R3 = 3  # rightmost / topmost
    R4 = 4  # topmost / leftmost


_yx = itemgetter(1, 0)


def find_extremes(points: Sequence) -> ExtremeQuadruple:
    if not points:
        raise GeometryError("extremes of an empty point set")
    # tuples compare as (x, y), which is exactly the x-extreme tie-break
    index = points.index
    return ExtremeQuadruple(
        index(min(points)),
        index(min(points, key=_yx)),
        index(max(points)),
        index(max(points, key=_yx)),
    )


def quad_cycle(points: Sequence, quad: ExtremeQuadruple) -> tuple:
    return distinct_cycle([points[i] for i in quad])


def discard_interior(points: Sequence, quad: ExtremeQuadruple):
    """Drop points strictly inside the quadrilateral of the four extremes.

    Returns ``(survivors, discarded)``: survivor indices in input order and
    the number of points dropped.
    """
    cycle = quad_cycle(points, quad)
    n = len(points)
    if len(cycle) < 3:
        return list(range(n)), 0
    (ax0, ay0), (ax1, ay1), (ax2, ay2), (ax3, ay3), (dx0, dy0), (dx1, dy1), (dx2, dy2), (dx3, dy3) = \
        quad_edge_terms(cycle)
    survivors = []
    keep = survivors.append
    for i, (x, y) in enumerate(points):
        if (dx0 * (y - ay0) - dy0 * (x - ax0) > 0
                and dx1 * (y - ay1) - dy1 * (x - ax1) > 0
                and dx2 * (y - ay2) - dy2 * (x - ax2) > 0
                and dx3 * (y - ay3) - dy3 * (x - ax3) > 0):
            continue
        keep(i)
    return survivors, n - len(survivors)


@dataclass
class SortedPointSet:
    """Two sorted index views over one point array plus per-point tags.

    The four scan cursors belong to the set so repeated e-Quad extraction
    never revisits a settled list position.
    """

    points: list
    by_x: list
    by_y: list
    state: bytearray
    source: list | None = None
    cursors: list = field(default_factory=list)
    scan_discards: int = 0

    def __post_init__(self):
        if not self.cursors:
            n = len(self.points)
            # front of by_x, back of by_x, front of by_y, back of by_y
            self.cursors = [0, n - 1, 0, n - 1]

    def active_count(self) -> int:
        return self.state.count(Tag.ACTIVE)

    def indices_tagged(self, tag: Tag) -> list:
        return [i for i, t in enumerate(self.state) if t == tag]


def sort_dual(points: Sequence, source: list | None = None) -> SortedPointSet:
    points = list(points)
    n = len(points)
    by_x = sorted(range(n), key=points.__getitem__)
    yx = [(p[1], p[0]) for p in points]
    by_y = sorted(range(n), key=yx.__getitem__)
    return SortedPointSet(points, by_x, by_y, bytearray(n), source)


def classify_subregion(first_quad, p) -> SubRegion:
    """Which corner region of the bounding box p falls in, relative to the
    first e-Quad (anything exposing xmin/ymin/xmax/ymax vertices).

    A region is the strict outer side of one quad edge. Collapsed edges are
    skipped, so a segment-shaped quad splits the plane between the two
    regions whose edges survive.
    """
    px, py = p[0], p[1]
    corners = (first_quad.xmin, first_quad.ymin, first_quad.xmax, first_quad.ymax)
    for region in (SubRegion.R1, SubRegion.R2, SubRegion.R3, SubRegion.R4):
        a = corners[region - 1]
        b = corners[region % 4]
        if a == b:
            continue
        if (b[0] - a[0]) * (py - a[1]) - (b[1] - a[1]) * (px - a[0]) < 0:
            return region
    return SubRegion.NONE
