"""
Exact planar geometry on the scaled triangular lattice.

All coordinates are integers or fractions.Fraction values, so every
orientation and containment predicate below is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import List, Optional, Sequence, Union

from more_itertools import pairwise

Number = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Point:
    x: Number
    y: Number

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def scale(self, k: Number) -> "Point":
        return Point(self.x * k, self.y * k)

    def divide(self, k: int) -> "Point":
        """Divide by an integer, staying integral whenever possible."""
        x = Fraction(self.x, k) if not isinstance(self.x, Fraction) else self.x / k
        y = Fraction(self.y, k) if not isinstance(self.y, Fraction) else self.y / k
        return Point(_normalize(x), _normalize(y))

    def as_list(self) -> List[str]:
        return [str(self.x), str(self.y)]


def _normalize(value: Number) -> Number:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


# An ordered list of vertices whose first and last entry are the same
Polygon = List[Point]


def cross(u: Point, v: Point) -> Number:
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point) -> Number:
    return u.x * v.x + u.y * v.y


def left_normal(u: Point) -> Point:
    return Point(-u.y, u.x)


def is_left(point: Point, l0: Point, l1: Point) -> Number:
    """Determine if a point is to the left of the line through l0 and l1.

    Returns 0 if the point is on the line, a positive number if the point is
    to the left of the line, and a negative number if it is on the right.
    The line is oriented in the direction from l0 to l1.
    """
    return (l1.x - l0.x) * (point.y - l0.y) - (point.x - l0.x) * (l1.y - l0.y)


def _half(u: Point) -> int:
    return 0 if (u.y > 0 or (u.y == 0 and u.x > 0)) else 1


def _angle_cmp(u: Point, v: Point) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = cross(u, v)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def ccw_order(directions: Sequence[Point]) -> List[int]:
    """Indices of the given nonzero direction vectors sorted counterclockwise.

    Raises:
        ValueError: if two directions coincide or a direction is zero.
    """
    for d in directions:
        if d.x == 0 and d.y == 0:
            raise ValueError("zero direction vector in rotation")
    order = sorted(range(len(directions)),
                   key=cmp_to_key(lambda i, j: _angle_cmp(directions[i], directions[j])))
    for i, j in pairwise(order):
        if _angle_cmp(directions[i], directions[j]) == 0:
            raise ValueError(f"parallel directions {directions[i]} and {directions[j]}")
    return order


def on_segment(point: Point, a: Point, b: Point) -> bool:
    """True if point lies on the closed segment from a to b."""
    if is_left(point, a, b) != 0:
        return False
    return (min(a.x, b.x) <= point.x <= max(a.x, b.x)
            and min(a.y, b.y) <= point.y <= max(a.y, b.y))


def segment_param(point: Point, a: Point, b: Point) -> Fraction:
    """Parameter t with point = a + t (b - a) for a point on the segment."""
    d = b - a
    return Fraction(dot(point - a, d)) / dot(d, d)


def segment_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Optional[Point]:
    """Intersection point of two closed segments, or None.

    Collinear overlapping segments have no single intersection point and
    also return None.
    """
    r = p2 - p1
    s = q2 - q1
    denom = cross(r, s)
    if denom == 0:
        return None
    qp = q1 - p1
    t = Fraction(cross(qp, s)) / denom
    u = Fraction(cross(qp, r)) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return Point(_normalize(p1.x + t * r.x), _normalize(p1.y + t * r.y))
    return None


def winding_number(point: Point, polygon: Polygon) -> int:
    """Winding number of a closed polygon around a point not on it."""
    wn = 0
    # each polygon edge is a (source, target) pair of subsequent vertices
    for source, target in pairwise(polygon):
        if source.y <= point.y:
            if target.y > point.y and is_left(point, source, target) > 0:
                wn += 1
        elif target.y <= point.y and is_left(point, source, target) < 0:
            wn -= 1
    return wn


def point_in_polygon(point: Point, polygon: Polygon) -> bool:
    """Nonzero winding rule."""
    return winding_number(point, polygon) != 0


def inside_even_odd(point: Point, polygon: Polygon) -> bool:
    """Even-odd rule; works for self-intersecting closed curves.

    The parity of the winding number equals the parity of the number of
    crossings of a ray from the point, so doubled passes cancel.
    """
    return winding_number(point, polygon) % 2 == 1


def close(points: Sequence[Point]) -> Polygon:
    pts = list(points)
    if pts and pts[0] != pts[-1]:
        pts.append(pts[0])
    return pts


def signed_area2(points: Sequence[Point]) -> Number:
    """Twice the signed area of an open vertex cycle (positive if ccw)."""
    pts = close(points)
    return sum(cross(a, b) for a, b in pairwise(pts))


def _drop_degenerate(points: Sequence[Point]) -> List[Point]:
    pts = [p for i, p in enumerate(points) if p != points[i - 1]] if len(points) > 1 else list(points)
    changed = True
    while changed and len(pts) > 3:
        changed = False
        for i in range(len(pts)):
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if is_left(cur, prev, nxt) == 0:
                del pts[i]
                changed = True
                break
    return pts


def _in_closed_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    return is_left(p, a, b) >= 0 and is_left(p, b, c) >= 0 and is_left(p, c, a) >= 0


def ear_point(points: Sequence[Point]) -> Point:
    """A point strictly inside a simple counterclockwise polygon.

    Uses the centroid of an ear: a convex vertex whose closed triangle with
    its neighbours contains no other polygon vertex.

    Args:
        points: open vertex cycle, counterclockwise

    Returns:
        Exact interior point

    Raises:
        ValueError: if the polygon is degenerate or not counterclockwise
    """
    pts = _drop_degenerate(points)
    if len(pts) < 3:
        raise ValueError("degenerate face polygon")
    n = len(pts)
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        if is_left(c, a, b) <= 0:
            continue
        if any(_in_closed_triangle(p, a, b, c)
               for k, p in enumerate(pts) if k not in (i - 1 if i > 0 else n - 1, i, (i + 1) % n)):
            continue
        return Point(_normalize(Fraction(a.x + b.x + c.x, 3)),
                     _normalize(Fraction(a.y + b.y + c.y, 3)))
    raise ValueError("no ear found; polygon is not simple and counterclockwise")
