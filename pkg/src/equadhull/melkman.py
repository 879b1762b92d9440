"""Melkman's deque hull of a simple polyline."""

from collections import deque
from itertools import islice

from .geometry import GeometryError


def _yx(p):
    return (p[1], p[0])


def canonicalize(cycle):
    """Rotate a CCW cycle to start at its lowest (then leftmost) vertex."""
    if not cycle:
        return []
    cycle = list(cycle)
    k = min(range(len(cycle)), key=lambda i: _yx(cycle[i]))
    return cycle[k:] + cycle[:k]


def drop_collinear(cycle, stats=None):
    """Remove vertices where a CCW cycle fails to turn strictly left."""
    tests = 0
    out = list(cycle)
    changed = True
    while changed and len(out) > 2:
        changed = False
        kept = []
        m = len(out)
        for i in range(m):
            a = kept[-1] if kept else out[i - 1]
            b, c = out[i], out[(i + 1) % m]
            tests += 1
            if (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0:
                kept.append(b)
            else:
                changed = True
        out = kept
    if stats is not None:
        stats["orient_tests"] = stats.get("orient_tests", 0) + tests
    return out


def _segment_hull(pts):
    lo, hi = min(pts), max(pts)
    if lo == hi:
        return [lo]
    return sorted((lo, hi), key=_yx)


def melkman_hull(polyline, stats=None):
    """Canonical strictly convex hull of a simple polyline or polygon.

    Every vertex is visited once. ``stats`` (a dict) accumulates the number
    of orientation tests under ``"orient_tests"``.
    """
    pts = []
    for p in polyline:
        if not pts or p != pts[-1]:
            pts.append(p)
    if not pts:
        raise GeometryError("hull of an empty polyline")
    m = len(pts)
    a = pts[0]
    ax, ay = a[0], a[1]
    k = 1
    while k < m and pts[k] == a:
        k += 1
    tests = 0
    if k < m:
        bx, by = pts[k][0] - ax, pts[k][1] - ay
        k += 1
        while k < m:
            tests += 1
            if bx * (pts[k][1] - ay) - by * (pts[k][0] - ax) != 0:
                break
            k += 1
    if k >= m:
        if stats is not None:
            stats["orient_tests"] = stats.get("orient_tests", 0) + tests
        return _segment_hull(pts)

    # the collinear lead-in collapses to its two extreme endpoints
    e1, e2, c = min(pts[:k]), max(pts[:k]), pts[k]
    tests += 1
    if (e2[0] - e1[0]) * (c[1] - e1[1]) - (e2[1] - e1[1]) * (c[0] - e1[0]) > 0:
        d = deque((c, e1, e2, c))
    else:
        d = deque((c, e2, e1, c))
    push, pop = d.append, d.pop
    pushleft, popleft = d.appendleft, d.popleft

    # edges touching the newest vertex: top (d[-2] -> d[-1]), bottom (d[0] -> d[1])
    (tx, ty), (bx, by) = d[-2], d[0]
    tu, tv = d[-1][0] - tx, d[-1][1] - ty
    bu, bv = d[1][0] - bx, d[1][1] - by
    # two tests per vertex for the inside check, counted up front
    tests += 2 * (m - k - 1)
    for p in islice(pts, k + 1, None):
        px, py = p
        if tu * (py - ty) - tv * (px - tx) > 0 and bu * (py - by) - bv * (px - bx) > 0:
            continue
        while len(d) > 2:
            t0, t1 = d[-2], d[-1]
            tests += 1
            if (t1[0] - t0[0]) * (py - t0[1]) - (t1[1] - t0[1]) * (px - t0[0]) > 0:
                break
            pop()
        push(p)
        while len(d) > 2:
            b0, b1 = d[0], d[1]
            tests += 1
            if (b1[0] - b0[0]) * (py - b0[1]) - (b1[1] - b0[1]) * (px - b0[0]) > 0:
                break
            popleft()
        pushleft(p)
        (tx, ty), (bx, by) = d[-2], d[0]
        tu, tv = px - tx, py - ty
        bu, bv = d[1][0] - bx, d[1][1] - by

    d.popleft()
    if stats is not None:
        stats["orient_tests"] = stats.get("orient_tests", 0) + tests
    return canonicalize(drop_collinear(d, stats))
