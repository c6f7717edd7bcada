import pytest
from fractions import Fraction

from wulab.exact import (
    GeometryError,
    Point2,
    Segment,
    orient,
    p2,
    point_on_segment,
    rat,
    rat_str,
    segment_intersection,
)


def test_rational_parse_and_format():
    assert rat("3/4") == Fraction(3, 4)
    assert rat(5) == Fraction(5)
    assert rat_str(Fraction(6, 4)) == "3/2"
    assert rat_str(Fraction(7)) == "7"
    with pytest.raises(GeometryError):
        rat("1/0")
    with pytest.raises(GeometryError):
        rat(1.5)


def test_orient_canonical():
    assert orient(p2(0, 0), p2(1, 0), p2(0, 1)) == 1
    assert orient(p2(0, 0), p2(1, 0), p2(2, 0)) == 0
    assert orient(p2(0, 0), p2(1, 0), p2(1, -1)) == -1


def test_orient_antisymmetry():
    pts = [p2(0, 0), p2(3, 1), p2(1, 4), p2(-2, 5), p2(7, -3)]
    for a in pts:
        for b in pts:
            for c in pts:
                s = orient(a, b, c)
                assert orient(b, a, c) == -s
                assert orient(a, c, b) == -s


def test_degenerate_segment_rejected():
    with pytest.raises(GeometryError):
        Segment(p2(1, 1), p2(1, 1))


def test_point_on_segment():
    s = Segment(p2(0, 0), p2(1, 0))
    assert point_on_segment(p2("1/2", 0), s)
    assert point_on_segment(p2(0, 0), s)
    assert not point_on_segment(p2("1/2", "1/3"), s)
    assert not point_on_segment(p2(2, 0), s)


def test_unit_square_diagonals_cross_at_center():
    d1 = Segment(p2(0, 0), p2(1, 1))
    d2 = Segment(p2(1, 0), p2(0, 1))
    assert segment_intersection(d1, d2) == p2("1/2", "1/2")


def test_parallel_disjoint():
    s = Segment(p2(0, 0), p2(1, 0))
    t = Segment(p2(0, 1), p2(1, 1))
    assert segment_intersection(s, t) is None


def test_collinear_overlap():
    s = Segment(p2(0, 0), p2(2, 0))
    t = Segment(p2(1, 0), p2(3, 0))
    got = segment_intersection(s, t)
    assert isinstance(got, Segment)
    assert {got.a, got.b} == {p2(1, 0), p2(2, 0)}


def test_collinear_touching_at_point():
    s = Segment(p2(0, 0), p2(1, 0))
    t = Segment(p2(1, 0), p2(2, 0))
    assert segment_intersection(s, t) == p2(1, 0)


def test_intersection_symmetry_random():
    import random

    rng = random.Random(3)
    for _ in range(300):
        pts = [p2(rng.randint(-8, 8), rng.randint(-8, 8)) for _ in range(4)]
        if pts[0] == pts[1] or pts[2] == pts[3]:
            continue
        s, t = Segment(pts[0], pts[1]), Segment(pts[2], pts[3])
        assert segment_intersection(s, t) == segment_intersection(t, s)


def test_intersection_point_is_exact():
    # Denominators stay bounded by the coordinate cross products.
    s = Segment(p2(0, 0), p2(7, 3))
    t = Segment(p2(0, 3), p2(7, 0))
    got = segment_intersection(s, t)
    assert isinstance(got, Point2)
    assert got == p2(Fraction(7, 2), Fraction(3, 2))
