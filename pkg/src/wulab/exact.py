"""Exact rational points and the geometric predicates everything else is built on.

All coordinates are `fractions.Fraction`; no predicate ever touches a float.
A misclassified crossing would silently flip an integer invariant, so the
whole kernel is branch-exact: signs come from integer cross products, and
intersection points are solved in rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


class GeometryError(Exception):
    """Violated geometric precondition or degenerate input."""


def rat(value: RationalLike) -> Fraction:
    """Coerce int / 'p/q' string / Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise GeometryError(f"not a rational: {value!r}")
    if isinstance(value, (int, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"not a rational: {value!r}") from exc
    raise GeometryError(f"not a rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Serialize as 'p/q', or 'p' when the denominator is 1."""
    return str(value)


@dataclass(frozen=True)
class Point2:
    x: Fraction
    y: Fraction

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, s) -> "Point2":
        s = rat(s)
        return Point2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Point2":
        return Point2(-self.x, -self.y)

    def cross(self, other: "Point2") -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "Point2") -> Fraction:
        return self.x * other.x + self.y * other.y

    def perp(self) -> "Point2":
        """Rotate by +90 degrees."""
        return Point2(-self.y, self.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __repr__(self):
        return f"P2({self.x}, {self.y})"


@dataclass(frozen=True)
class Point3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __add__(self, other: "Point3") -> "Point3":
        return Point3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Point3") -> "Point3":
        return Point3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, s) -> "Point3":
        s = rat(s)
        return Point3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def cross(self, other: "Point3") -> "Point3":
        return Point3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def dot(self, other: "Point3") -> Fraction:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def __repr__(self):
        return f"P3({self.x}, {self.y}, {self.z})"


def p2(x: RationalLike, y: RationalLike) -> Point2:
    return Point2(rat(x), rat(y))


def p3(x: RationalLike, y: RationalLike, z: RationalLike) -> Point3:
    return Point3(rat(x), rat(y), rat(z))


@dataclass(frozen=True)
class Segment:
    a: Point2
    b: Point2

    def __post_init__(self):
        if self.a == self.b:
            raise GeometryError(f"degenerate segment at {self.a}")

    @property
    def vec(self) -> Point2:
        return self.b - self.a

    def __repr__(self):
        return f"Seg({self.a}, {self.b})"


def sign(value: Fraction) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def orient(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of (b-a) x (c-a): +1 when c is strictly left of the line a->b."""
    return sign((b - a).cross(c - a))


def point_on_segment(p: Point2, s: Segment) -> bool:
    """Closed-segment membership."""
    if orient(s.a, s.b, p) != 0:
        return False
    d = s.vec
    t = (p - s.a).dot(d)
    return 0 <= t <= d.dot(d)


def segment_intersection(s: Segment, t: Segment):
    """Exact intersection of two closed segments.

    Returns None (disjoint), a Point2 (single common point), or a Segment
    (collinear overlap of positive length).
    """
    d1, d2 = s.vec, t.vec
    denom = d1.cross(d2)
    offset = t.a - s.a
    if denom != 0:
        # Transversal lines; solve s.a + u*d1 == t.a + v*d2.
        u = offset.cross(d2) / denom
        v = offset.cross(d1) / denom
        if 0 <= u <= 1 and 0 <= v <= 1:
            return s.a + u * d1
        return None
    if offset.cross(d1) != 0:
        return None  # parallel, different lines
    # Collinear: overlap interval in the parameter of s.
    dd = d1.dot(d1)
    t0 = (t.a - s.a).dot(d1) / dd
    t1 = (t.b - s.a).dot(d1) / dd
    lo, hi = min(t0, t1), max(t0, t1)
    lo, hi = max(lo, Fraction(0)), min(hi, Fraction(1))
    if lo > hi:
        return None
    if lo == hi:
        return s.a + lo * d1
    return Segment(s.a + lo * d1, s.a + hi * d1)
