import random

import pytest

from equadhull.geometry import GeometryError
from equadhull.preprocess import (SubRegion, Tag, classify_subregion, discard_interior,
                                  find_extremes, quad_cycle, sort_dual)
from equadhull.equads import EQuad
from equadhull.reference import oracle_hull

from hullcheck import random_int_points

DIAMOND_Q = EQuad.from_vertices((-1, 0), (0, -1), (1, 0), (0, 1))


def test_find_extremes_square_with_center():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
    q = find_extremes(pts)
    # ties: x-extremes by (x, y), y-extremes by (y, x)
    assert [pts[i] for i in q] == [(0, 0), (0, 0), (2, 2), (2, 2)]


def test_find_extremes_permutation_invariant():
    rng = random.Random(5)
    for _ in range(50):
        pts = random_int_points(rng, 30, -5, 5)
        want = [pts[i] for i in find_extremes(pts)]
        rng.shuffle(pts)
        assert [pts[i] for i in find_extremes(pts)] == want


def test_find_extremes_empty():
    with pytest.raises(GeometryError):
        find_extremes([])


def test_discard_interior_diamond_center():
    pts = [(0, 2), (2, 0), (4, 2), (2, 4), (2, 2), (3, 2)]
    survivors, dropped = discard_interior(pts, find_extremes(pts))
    assert dropped == 2
    assert survivors == [0, 1, 2, 3]


def test_discard_keeps_points_on_quad_edges():
    pts = [(-2, 0), (0, -2), (2, 0), (0, 2), (1, 1), (0, 0)]
    survivors, dropped = discard_interior(pts, find_extremes(pts))
    assert dropped == 1 and 4 in survivors and 5 not in survivors


def test_discard_soundness_against_oracle():
    rng = random.Random(11)
    for _ in range(300):
        pts = random_int_points(rng, rng.randint(1, 40), -8, 8)
        survivors, _ = discard_interior(pts, find_extremes(pts))
        kept = {pts[i] for i in survivors}
        assert set(oracle_hull(pts)) <= kept
        assert oracle_hull([pts[i] for i in survivors]) == oracle_hull(pts)


def test_quad_cycle_collapses_repeats():
    pts = [(0, 0), (1, 1), (2, 2)]
    assert quad_cycle(pts, find_extremes(pts)) == ((0, 0), (2, 2))


def test_sort_dual_orders_and_tags():
    rng = random.Random(2)
    pts = random_int_points(rng, 1000, -30, 30)
    sps = sort_dual(pts)
    assert sorted(sps.by_x) == list(range(1000)) == sorted(sps.by_y)
    xs = [pts[i] for i in sps.by_x]
    ys = [(pts[i][1], pts[i][0]) for i in sps.by_y]
    assert xs == sorted(pts) and ys == sorted((p[1], p[0]) for p in pts)
    assert sps.active_count() == 1000
    assert sps.cursors == [0, 999, 0, 999]
    assert sps.indices_tagged(Tag.DISCARDED_INTERIOR) == []


@pytest.mark.parametrize("p, region", [
    ((-0.9, -0.9), SubRegion.R1),
    ((0, 0), SubRegion.NONE),
    ((0.9, 0.9), SubRegion.R3),
    ((0.9, -0.9), SubRegion.R2),
    ((-0.9, 0.9), SubRegion.R4),
    ((0.5, 0.5), SubRegion.NONE),
])
def test_classify_diamond(p, region):
    assert classify_subregion(DIAMOND_Q, p) == region


def test_classify_segment_quads():
    # xmin == ymax and ymin == xmax: a falling segment
    q = EQuad.from_vertices((0, 4), (4, 0), (4, 0), (0, 4))
    assert classify_subregion(q, (1, 1)) == SubRegion.R1
    assert classify_subregion(q, (3, 3)) == SubRegion.R3
    # xmin == ymin and xmax == ymax: a rising segment splits into R2 / R4
    q = EQuad.from_vertices((0, 0), (0, 0), (4, 4), (4, 4))
    assert classify_subregion(q, (3, 1)) == SubRegion.R2
    assert classify_subregion(q, (1, 3)) == SubRegion.R4
    assert classify_subregion(q, (2, 2)) == SubRegion.NONE


def test_classify_at_most_one_region():
    rng = random.Random(9)
    for _ in range(200):
        pts = random_int_points(rng, 12, -20, 20)
        q = find_extremes(pts)
        first = EQuad.from_vertices(*(pts[i] for i in q))
        for p in pts:
            hits = 0
            for r in (1, 2, 3, 4):
                a, b = first[r - 1], first[r % 4]
                if a != b and (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) < 0:
                    hits += 1
            assert hits <= 1
            assert (classify_subregion(first, p) == SubRegion.NONE) == (hits == 0)
