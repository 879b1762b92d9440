import random

import pytest

from equadhull.geometry import GeometryError
from equadhull.melkman import canonicalize, drop_collinear, melkman_hull
from equadhull.reference import graham_scan, oracle_hull

from hullcheck import first_violation, is_canonical_hull, random_simple_polygon


def test_square():
    assert melkman_hull([(0, 0), (1, 0), (1, 1), (0, 1)]) == [(0, 0), (1, 0), (1, 1), (0, 1)]


def test_square_rotated_start():
    assert melkman_hull([(1, 1), (0, 1), (0, 0), (1, 0)]) == [(0, 0), (1, 0), (1, 1), (0, 1)]


def test_reflex_dent_removed():
    chain = [(0, 0), (2, 0), (1, 0.5), (2, 2), (0, 2)]
    assert melkman_hull(chain) == [(0, 0), (2, 0), (2, 2), (0, 2)]


def test_collinear_lead_in():
    chain = [(0, 0), (1, 0), (2, 0), (3, 0), (3, 3), (0, 3)]
    assert melkman_hull(chain) == [(0, 0), (3, 0), (3, 3), (0, 3)]


def test_collinear_points_on_edges_dropped():
    chain = [(0, 0), (2, 0), (4, 0), (4, 2), (4, 4), (2, 4), (0, 4), (0, 2)]
    assert melkman_hull(chain) == [(0, 0), (4, 0), (4, 4), (0, 4)]


def test_degenerate_inputs():
    assert melkman_hull([(5, 5)]) == [(5, 5)]
    assert melkman_hull([(5, 5), (5, 5)]) == [(5, 5)]
    assert melkman_hull([(3, 3), (0, 0), (1, 1)]) == [(0, 0), (3, 3)]
    with pytest.raises(GeometryError):
        melkman_hull([])


def test_clockwise_polygon():
    assert melkman_hull([(0, 0), (0, 1), (1, 1), (1, 0)]) == [(0, 0), (1, 0), (1, 1), (0, 1)]


def test_canonicalize_and_drop_collinear():
    assert canonicalize([(1, 1), (0, 1), (0, 0), (1, 0)]) == [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert drop_collinear([(0, 0), (1, 0), (2, 0), (2, 2)]) == [(0, 0), (2, 0), (2, 2)]


def test_random_simple_polygons_match_oracle():
    rng = random.Random(31)
    tested = 0
    while tested < 500:
        poly = random_simple_polygon(rng, rng.randint(3, 60), radius=rng.choice((10, 100, 1000)))
        if first_violation(poly) is not None:
            continue
        tested += 1
        stats = {}
        hull = melkman_hull(poly, stats)
        assert hull == oracle_hull(poly) == graham_scan(poly)
        assert is_canonical_hull(hull)
        assert stats["orient_tests"] <= 6 * len(poly)


def test_any_start_vertex_and_direction():
    rng = random.Random(8)
    for _ in range(100):
        poly = random_simple_polygon(rng, 25, radius=50)
        if first_violation(poly) is not None:
            continue
        want = oracle_hull(poly)
        for k in range(0, len(poly), 5):
            rolled = poly[k:] + poly[:k]
            assert melkman_hull(rolled) == want
            assert melkman_hull(rolled[::-1]) == want


def test_open_simple_chain():
    # an x-monotone zigzag is a simple open chain
    chain = [(x, (x * 7) % 5) for x in range(30)]
    assert melkman_hull(chain) == oracle_hull(chain)
