"""Planar convex hulls by recursive e-Quad peeling, with comparators."""

from .geometry import Aabb, GeometryError, Orientation, Point, compute_aabb, orient, strictly_inside_quad
from .melkman import melkman_hull
from .pipeline import HullStats, Trace, equad_convex_hull, equad_hull
from .reference import graham_scan, jarvis_march, monotone_chain, oracle_hull

__version__ = "0.1.0"

__all__ = [
    "Aabb", "GeometryError", "Orientation", "Point", "compute_aabb", "orient",
    "strictly_inside_quad", "melkman_hull", "HullStats", "Trace",
    "equad_convex_hull", "equad_hull", "graham_scan", "jarvis_march",
    "monotone_chain", "oracle_hull",
]
