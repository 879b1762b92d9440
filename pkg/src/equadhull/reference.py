"""Comparator hull algorithms and a brute-force oracle.

All of them return the same canonical form: the strictly convex hull as a
CCW list of input points, starting at the lowest (then leftmost) vertex.
Collinear boundary points are never reported. Degenerate inputs give one
point (all coincide) or the two extreme endpoints (all collinear).
"""

import time
from functools import cmp_to_key
from itertools import groupby

from .geometry import GeometryError
from .melkman import canonicalize

ORACLE_MAX_POINTS = 3000


class TimeBudgetExceeded(RuntimeError):
    pass


def _yx(p):
    return (p[1], p[0])


def _check_nonempty(points):
    if not points:
        raise GeometryError("hull of an empty point set")


def monotone_chain(points):
    """Andrew's monotone chain: lexicographic sort, then lower and upper
    chains."""
    _check_nonempty(points)
    pts = sorted(points)
    lower = []
    push, pop = lower.append, lower.pop
    for p in pts:
        while len(lower) > 1:
            a, b = lower[-2], lower[-1]
            if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) <= 0:
                pop()
            else:
                break
        push(p)
    upper = []
    push, pop = upper.append, upper.pop
    for p in reversed(pts):
        while len(upper) > 1:
            a, b = upper[-2], upper[-1]
            if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) <= 0:
                pop()
            else:
                break
        push(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull.pop()
    if not hull:
        hull = [pts[0]]
    return canonicalize(hull)


def graham_scan(points):
    """Graham's scan around the lowest point.

    The polar sort uses a float cotangent key; correctly rounded division
    can merge distinct angles but never swaps them, so tied runs are
    re-sorted with exact cross products.
    """
    _check_nonempty(points)
    pivot = min(points, key=_yx)
    px, py = pivot[0], pivot[1]
    neg_inf = float("-inf")
    keyed = []
    add = keyed.append
    for p in points:
        dx, dy = p[0] - px, p[1] - py
        if dy:
            add((-dx / dy, dx * dx + dy * dy, p))
        elif dx:
            add((neg_inf, dx * dx, p))
    if not keyed:
        return [pivot]
    keyed.sort()

    def by_angle(s, t):
        a, b = s[2], t[2]
        c = (a[0] - px) * (b[1] - py) - (a[1] - py) * (b[0] - px)
        if c:
            return -1 if c > 0 else 1
        return (s[1] > t[1]) - (s[1] < t[1])

    ordered = []
    for _, run in groupby(keyed, key=lambda t: t[0]):
        run = list(run)
        if len(run) > 1:
            run.sort(key=cmp_to_key(by_angle))
        ordered.extend(t[2] for t in run)

    stack = [pivot]
    push, pop = stack.append, stack.pop
    for p in ordered:
        while len(stack) > 1:
            a, b = stack[-2], stack[-1]
            if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) <= 0:
                pop()
            else:
                break
        push(p)
    return stack


def jarvis_march(points, budget_ns=None):
    """Gift wrapping from the lowest point; among collinear candidates the
    farthest wins. O(nh).

    With ``budget_ns`` set, raises TimeBudgetExceeded once the wrap has run
    longer than that.
    """
    _check_nonempty(points)
    deadline = None if budget_ns is None else time.perf_counter_ns() + budget_ns
    start = min(points, key=_yx)
    hull = [start]
    p = start
    while True:
        if deadline is not None and time.perf_counter_ns() > deadline:
            raise TimeBudgetExceeded(f"gift wrapping exceeded {budget_ns} ns")
        px, py = p[0], p[1]
        q = None
        for r in points:
            if r != p:
                q = r
                break
        if q is None:
            return hull
        qx, qy = q[0] - px, q[1] - py
        qd = qx * qx + qy * qy
        for r in points:
            rx, ry = r[0] - px, r[1] - py
            c = qx * ry - qy * rx
            if c < 0 or (c == 0 and rx * rx + ry * ry > qd):
                q = r
                qx, qy = rx, ry
                qd = rx * rx + ry * ry
        if q == start:
            return hull
        hull.append(q)
        p = q


def _between(c, a, b):
    # c collinear with a, b: strictly inside the segment
    return (c[0] - a[0]) * (c[0] - b[0]) + (c[1] - a[1]) * (c[1] - b[1]) < 0


def oracle_hull(points):
    """Brute-force hull: (a, b) is a hull edge iff every other point is
    strictly left of a->b or strictly between a and b. O(n^3).
    """
    _check_nonempty(points)
    pts = list(dict.fromkeys(tuple(p) for p in points))
    if len(pts) > ORACLE_MAX_POINTS:
        raise GeometryError(
            f"oracle limited to {ORACLE_MAX_POINTS} distinct points, got {len(pts)}")
    # map back to the caller's objects
    original = {}
    for p in points:
        original.setdefault(tuple(p), p)
    if len(pts) == 1:
        return [original[pts[0]]]
    succ = {}
    for a in pts:
        for b in pts:
            if a == b:
                continue
            dx, dy = b[0] - a[0], b[1] - a[1]
            for c in pts:
                if c == a or c == b:
                    continue
                d = dx * (c[1] - a[1]) - dy * (c[0] - a[0])
                if d < 0 or (d == 0 and not _between(c, a, b)):
                    break
            else:
                succ[a] = b
    start = min(pts, key=_yx)
    hull = [start]
    v = succ[start]
    while v != start:
        hull.append(v)
        v = succ[v]
        if len(hull) > len(pts):
            raise AssertionError("oracle edge walk did not close")
    return [original[p] for p in hull]


ALGORITHMS = {
    "graham": graham_scan,
    "monotone": monotone_chain,
    "jarvis": jarvis_march,
}
