from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.geometry import (
    Point,
    ccw_order,
    close,
    ear_point,
    inside_even_odd,
    on_segment,
    segment_intersection,
    segment_param,
    signed_area2,
    winding_number,
)

SQUARE = [Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)]
L_SHAPE = [Point(0, 0), Point(4, 0), Point(4, 2), Point(2, 2), Point(2, 4), Point(0, 4)]


def test_ccw_order_starts_at_positive_x_axis():
    dirs = [Point(0, -1), Point(1, 0), Point(-1, 0), Point(0, 1)]
    assert ccw_order(dirs) == [1, 3, 2, 0]


@pytest.mark.parametrize("dirs", [
    [Point(1, 0), Point(0, 0)],
    [Point(1, 1), Point(2, 2)],
])
def test_ccw_order_rejects_zero_and_parallel(dirs):
    with pytest.raises(ValueError):
        ccw_order(dirs)


def test_divide_keeps_integers():
    assert Point(6, 3).divide(3) == Point(2, 1)
    assert isinstance(Point(6, 3).divide(3).x, int)
    assert Point(1, 2).divide(2) == Point(Fraction(1, 2), 1)


def test_segment_intersection_is_exact():
    assert segment_intersection(Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0)) == Point(1, 1)
    x = segment_intersection(Point(0, 0), Point(1, 1), Point(0, 1), Point(1, 0))
    assert x == Point(Fraction(1, 2), Fraction(1, 2))


def test_segment_intersection_misses():
    assert segment_intersection(Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)) is None
    assert segment_intersection(Point(0, 0), Point(1, 1), Point(3, 0), Point(0, 3)) is None


def test_on_segment_and_param():
    assert on_segment(Point(1, 1), Point(0, 0), Point(4, 4))
    assert not on_segment(Point(5, 5), Point(0, 0), Point(4, 4))
    assert segment_param(Point(1, 1), Point(0, 0), Point(4, 4)) == Fraction(1, 4)


def test_winding_number_orientation():
    inside = Point(2, 2)
    assert winding_number(inside, close(SQUARE)) == 1
    assert winding_number(inside, close(list(reversed(SQUARE)))) == -1
    assert winding_number(Point(5, 2), close(SQUARE)) == 0


def test_even_odd_cancels_doubled_loops():
    twice = close(SQUARE + SQUARE)
    assert winding_number(Point(2, 2), twice) == 2
    assert not inside_even_odd(Point(2, 2), twice)
    assert inside_even_odd(Point(2, 2), close(SQUARE))


def test_signed_area():
    assert signed_area2(SQUARE) == 32
    assert signed_area2(list(reversed(SQUARE))) == -32


def test_ear_point_of_concave_polygon():
    p = ear_point(L_SHAPE)
    assert p == Point(Fraction(8, 3), Fraction(2, 3))
    assert winding_number(p, close(L_SHAPE)) == 1


def test_ear_point_needs_ccw_polygon():
    with pytest.raises(ValueError):
        ear_point(list(reversed(SQUARE)))
    with pytest.raises(ValueError):
        ear_point([Point(0, 0), Point(1, 1), Point(2, 2)])


@given(x0=st.integers(-50, 50), y0=st.integers(-50, 50),
       w=st.integers(2, 40), h=st.integers(2, 40),
       px=st.integers(-100, 100), py=st.integers(-100, 100))
def test_rectangle_containment(x0, y0, w, h, px, py):
    rect = [Point(x0, y0), Point(x0 + w, y0), Point(x0 + w, y0 + h), Point(x0, y0 + h)]
    # half-integer points never lie on the outline
    pt = Point(Fraction(2 * px + 1, 2), Fraction(2 * py + 1, 2))
    expected = x0 < pt.x < x0 + w and y0 < pt.y < y0 + h
    assert inside_even_odd(pt, close(rect)) == expected
    if expected:
        assert winding_number(pt, close(rect)) == 1
