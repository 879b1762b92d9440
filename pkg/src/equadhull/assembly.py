"""Edge chains per corner region and the simple polygon they form."""

from typing import NamedTuple

from .geometry import GeometryError
from .preprocess import SubRegion, classify_subregion

R1, R2, R3, R4 = SubRegion.R1, SubRegion.R2, SubRegion.R3, SubRegion.R4


class RegionRule(NamedTuple):
    region: SubRegion
    anchors: tuple
    proper: tuple


# Only these two vertex slots of an e-Quad may feed a region's chain.
REGION_RULES = (
    RegionRule(R1, ("xmin", "ymin"), ("xmin", "ymin")),
    RegionRule(R2, ("ymin", "xmax"), ("ymin", "xmax")),
    RegionRule(R3, ("xmax", "ymax"), ("xmax", "ymax")),
    RegionRule(R4, ("ymax", "xmin"), ("ymax", "xmin")),
)

# slot order (xmin, ymin, xmax, ymax) -> bitmask of regions it may feed
_SLOT_MASKS = (
    (1 << R1) | (1 << R4),
    (1 << R1) | (1 << R2),
    (1 << R2) | (1 << R3),
    (1 << R3) | (1 << R4),
)


def select_proper_vertices(q, first) -> list:
    """(region, vertex) pairs this e-Quad contributes to the edge chains.

    A vertex counts for a region only if it sits in one of the region's
    proper slots and actually lies in that region. Coincident slots yield the
    point once.
    """
    out = []
    for rule in REGION_RULES:
        seen = None
        for slot in rule.proper:
            v = getattr(q, slot)
            if v == seen:
                continue
            seen = v
            if classify_subregion(first, v) == rule.region:
                out.append((rule.region, v))
    return out


def _region_edges(first):
    """Per-region (ax, ay, dx, dy) of the first e-Quad's edges. A collapsed
    edge gets zero direction, so nothing is ever strictly outside it."""
    corners = first[:4]
    edges = [None]
    for r in (R1, R2, R3, R4):
        a, b = corners[r - 1], corners[r % 4]
        edges.append((a[0], a[1], b[0] - a[0], b[1] - a[1]))
    return edges


def _sort_chain(region, pts):
    if region == R1:
        pts.sort(key=lambda p: (p[0], -p[1]))
    elif region == R2:
        pts.sort()
    elif region == R3:
        pts.sort(key=lambda p: (-p[0], p[1]))
    else:
        pts.sort(reverse=True)
    out = []
    for p in pts:
        if not out or p != out[-1]:
            out.append(p)
    return out


def _collect(q, edges, lists, counts):
    """Route one e-Quad's vertices into the chain lists, one region lookup
    per distinct vertex."""
    verts = q[:4]
    for s in range(4):
        v = verts[s]
        if s and v in verts[:s]:
            continue
        mask = _SLOT_MASKS[s]
        for t in range(s + 1, 4):
            if verts[t] == v:
                mask |= _SLOT_MASKS[t]
        if counts is not None:
            key = q.ids[s]
            counts[key] = counts.get(key, 0) + 1
        x, y = v[0], v[1]
        for r in (1, 2, 3, 4):
            if mask >> r & 1:
                ax, ay, dx, dy = edges[r]
                if dx * (y - ay) - dy * (x - ax) < 0:
                    lists[r].append(v)
                    if counts is not None:
                        counts[key] += 1
                    break


def build_chains(equads, first=None, counts=None) -> dict:
    """Sorted, duplicate-free edge chains keyed by region.

    ``first`` defaults to the generation-0 e-Quad. ``counts``, if a dict,
    receives per-vertex tallies of how often chain building touched each
    e-Quad vertex (one region lookup, plus one insertion when accepted),
    keyed by the vertex's position id.
    """
    chains = {R1: [], R2: [], R3: [], R4: []}
    if not equads:
        return chains
    if first is None:
        first = equads[0]
    edges = _region_edges(first)
    lists = (None, chains[R1], chains[R2], chains[R3], chains[R4])
    if counts is not None:
        for q in equads:
            if q is not first:
                _collect(q, edges, lists, counts)
    else:
        add1, add2, add3, add4 = (lst.append for lst in lists[1:])
        (x1, y1, u1, v1), (x2, y2, u2, v2), (x3, y3, u3, v3), (x4, y4, u4, v4) = edges[1:]
        for q in equads:
            if q is first:
                continue
            a, b, c, d = q[0], q[1], q[2], q[3]
            if not (a != b and b != c and c != d and d != a and a != c and b != d):
                _collect(q, edges, lists, None)
                continue
            # each slot may only feed its two neighbouring regions
            x, y = a
            if u1 * (y - y1) - v1 * (x - x1) < 0:
                add1(a)
            elif u4 * (y - y4) - v4 * (x - x4) < 0:
                add4(a)
            x, y = b
            if u1 * (y - y1) - v1 * (x - x1) < 0:
                add1(b)
            elif u2 * (y - y2) - v2 * (x - x2) < 0:
                add2(b)
            x, y = c
            if u2 * (y - y2) - v2 * (x - x2) < 0:
                add2(c)
            elif u3 * (y - y3) - v3 * (x - x3) < 0:
                add3(c)
            x, y = d
            if u3 * (y - y3) - v3 * (x - x3) < 0:
                add3(d)
            elif u4 * (y - y4) - v4 * (x - x4) < 0:
                add4(d)
    for r in chains:
        chains[r] = _sort_chain(r, chains[r])
    return chains


def assemble_polygon(chains, first) -> list:
    """Join anchors and chains into one CCW vertex cycle:
    leftmost, R1, bottommost, R2, rightmost, R3, topmost, R4.
    """
    seq = [first[0], *chains[R1], first[1], *chains[R2],
           first[2], *chains[R3], first[3], *chains[R4]]
    out = []
    for p in seq:
        if not out or p != out[-1]:
            out.append(p)
    while len(out) > 1 and out[-1] == out[0]:
        out.pop()
    if not out:
        raise GeometryError("cannot assemble a polygon from nothing")
    return out
