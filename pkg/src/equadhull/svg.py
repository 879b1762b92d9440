"""Static SVG pictures of the intermediate stages of an e-Quad hull run."""

from xml.sax.saxutils import escape

from .geometry import compute_aabb
from .pipeline import Trace, equad_convex_hull

STAGES = ("discard", "equads", "chains", "polygon", "hull")
MAX_TRACE_POINTS = 10_000

SIZE = 640
MARGIN = 24
DOT_R = 3

STYLE = """\
.point { fill: #222; }
.discarded { fill: none; stroke: #999; stroke-width: 1; }
.quad0 { fill: none; stroke: #c33; stroke-width: 1.5; stroke-dasharray: 5 3; }
.equad { fill: none; stroke: #36c; stroke-width: 1; }
.chain { fill: none; stroke-width: 2; }
.r1 { stroke: #c33; } .r2 { stroke: #3a3; } .r3 { stroke: #36c; } .r4 { stroke: #c6c; }
.polygon { fill: #fd8; fill-opacity: 0.4; stroke: #b80; stroke-width: 1.5; }
.hull { fill: none; stroke: #111; stroke-width: 2; }
"""


class _Frame:
    """Maps data coordinates into the picture, y pointing up."""

    def __init__(self, points):
        lo, hi = compute_aabb(points)
        span = max(hi[0] - lo[0], hi[1] - lo[1]) or 1
        self.scale = (SIZE - 2 * MARGIN) / span
        self.x0, self.y1 = lo[0], hi[1]

    def __call__(self, p):
        x = MARGIN + (p[0] - self.x0) * self.scale
        y = MARGIN + (self.y1 - p[1]) * self.scale
        return f"{x:.2f},{y:.2f}"


def _dots(points, frame, hollow):
    out = []
    for i, p in enumerate(points):
        cls = "discarded" if i in hollow else "point"
        x, y = frame(p).split(",")
        out.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="{DOT_R}"/>')
    return out


def _poly(tag, cls, verts, frame, extra=""):
    pts = " ".join(frame(v) for v in verts)
    return f'<{tag} class="{cls}"{extra} points="{pts}"/>'


def render_svg(points, stage="hull", title=None) -> str:
    if stage not in STAGES:
        raise ValueError(f"unknown stage {stage!r}; expected one of {', '.join(STAGES)}")
    if len(points) > MAX_TRACE_POINTS:
        raise ValueError(f"{len(points)} points is too many to draw (limit {MAX_TRACE_POINTS})")
    trace = Trace()
    hull, stats = equad_convex_hull(points, trace=trace)
    frame = _Frame(points)

    if stage == "discard":
        hollow = set(trace.step1_discarded)
    else:
        hollow = set(trace.step1_discarded) | set(trace.scan_discarded)

    body = []
    if trace.first is not None and stage in ("discard", "chains"):
        body.append(_poly("polygon", "quad0", trace.first.cycle, frame))
    if stage == "equads":
        for q in trace.equads:
            body.append(_poly("polygon", "equad", q.cycle, frame,
                              f' data-generation="{q.generation}"'))
    elif stage == "chains":
        for region, chain in trace.chains.items():
            if chain:
                body.append(_poly("polyline", f"chain r{int(region)}", chain, frame))
    elif stage == "polygon":
        body.append(_poly("polygon", "polygon", trace.polygon, frame))
    elif stage == "hull":
        d = "M" + " L".join(frame(p) for p in hull) + " Z"
        body.append(f'<path class="hull" d="{d}"/>')
    body.extend(_dots(points, frame, hollow))

    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{escape(title or f'e-Quad hull, stage {stage}')}</title>",
        f"<desc>n={stats.n} equads={stats.equads} hull={stats.hull_size}</desc>",
        f"<style>\n{STYLE}</style>",
    ]
    return "\n".join(head + body + ["</svg>", ""])
