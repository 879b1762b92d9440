import math
import statistics

import numpy as np
import pytest

from equadhull.pointgen import (DISK_MAX_ATTEMPTS, MASK64, Distribution, GenSpec, GenSpecError,
                                PointFileError, format_coord, generate, parse_coord, read_points,
                                splitmix64, uniforms, write_points)
from equadhull.pointgen import _draws


def test_splitmix64_known_values():
    # reference outputs of the canonical generator seeded with 0
    state = 0
    out = []
    for _ in range(3):
        out.append(splitmix64(state))
        state = (state + 0x9E3779B97F4A7C15) & MASK64
    assert out == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_vector_stream_matches_scalar():
    seed = 123456789
    got = _draws(seed, 5, 4).tolist()
    # draw i is one splitmix64 step from state seed + i * gamma
    want = [splitmix64((seed + i * 0x9E3779B97F4A7C15) & MASK64) for i in range(5, 9)]
    assert got == want


def test_uniforms_in_unit_interval():
    u = uniforms(9, 0, 100_000)
    assert u.min() >= 0.0 and u.max() < 1.0
    assert abs(u.mean() - 0.5) < 0.005


def test_deterministic_and_seed_sensitive():
    a = generate(GenSpec("disk", 500, 7))
    assert a == generate(GenSpec("disk", 500, 7))
    assert a != generate(GenSpec("disk", 500, 8))


def test_rect_statistics():
    pts = generate(GenSpec("rect", 50_000, 1, lo=(-2.0, 10.0), hi=(4.0, 12.0)))
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    assert min(xs) >= -2 and max(xs) < 4 and min(ys) >= 10 and max(ys) < 12
    # uniform mean within 5 standard errors
    assert abs(statistics.fmean(xs) - 1.0) < 5 * 6 / math.sqrt(12 * 50_000)
    assert abs(statistics.fmean(ys) - 11.0) < 5 * 2 / math.sqrt(12 * 50_000)


def test_disk_statistics():
    pts = generate(GenSpec("disk", 50_000, 2, center=(3.0, -1.0), radius=2.0))
    r2 = [((x - 3) ** 2 + (y + 1) ** 2) / 4 for x, y in pts]
    assert max(r2) <= 1.0
    # squared radius of a uniform disk point is uniform on [0, 1]
    assert abs(statistics.fmean(r2) - 0.5) < 5 / math.sqrt(12 * 50_000)
    assert abs(statistics.fmean(x for x, _ in pts) - 3.0) < 0.02


def test_integer_grid_modes():
    rect = generate(GenSpec("rect", 5000, 3, grid=7))
    assert all(type(c) is int and 0 <= c < 7 for p in rect for c in p)
    assert len(set(rect)) == 49
    disk = generate(GenSpec("disk", 5000, 3, grid=10))
    assert all(type(c) is int for p in disk for c in p)
    assert all(x * x + y * y <= 100 for x, y in disk)


def test_zero_points():
    assert generate(GenSpec("rect", 0, 1)) == []


@pytest.mark.parametrize("spec", [
    GenSpec("square", 5),
    GenSpec("rect", -1),
    GenSpec("rect", 5, lo=(1.0, 0.0), hi=(1.0, 1.0)),
    GenSpec("disk", 5, radius=0.0),
    GenSpec("disk", 5, radius=math.inf),
    GenSpec("rect", 5, grid=0),
])
def test_invalid_specs(spec):
    with pytest.raises(GenSpecError):
        generate(spec)


def test_seed_is_reduced_to_64_bits():
    assert generate(GenSpec("rect", 10, 5)) == generate(GenSpec("rect", 10, 5 + (1 << 64)))


def test_disk_gap_cap_is_generous():
    # acceptance is pi/4, so a gap of 64 rejections has probability ~1e-43
    assert DISK_MAX_ATTEMPTS == 64
    assert Distribution("disk") is Distribution.DISK


def test_round_trip(tmp_path):
    pts = generate(GenSpec("disk", 300, 11)) + [(1, -2), (0.1, 3)]
    path = tmp_path / "pts.txt"
    write_points(path, pts, comment="hello\nworld")
    assert read_points(path) == [tuple(p) for p in pts]
    text = path.read_text()
    assert text.startswith("# hello\n# world\n")


def test_format_and_parse():
    assert format_coord(3) == "3" and format_coord(0.1) == "0.1"
    assert parse_coord("-17") == -17 and type(parse_coord("4")) is int
    assert parse_coord("1e3") == 1000.0
    with pytest.raises(PointFileError):
        parse_coord("nan")
    with pytest.raises(PointFileError):
        parse_coord("abc")


def test_read_errors(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1 2\n\n# note\n3 4 5\n")
    with pytest.raises(PointFileError, match="line 4"):
        read_points(p)
    p.write_text("1 inf\n")
    with pytest.raises(PointFileError, match="line 1"):
        read_points(p)


def test_numpy_types_do_not_leak():
    pts = generate(GenSpec("rect", 10, 1, grid=100))
    assert not any(isinstance(c, np.generic) for p in pts for c in p)
