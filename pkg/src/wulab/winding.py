"""Winding numbers of closed polygonal lines and exact partial windings of open ones.

The winding number is computed as the signed crossing count of a generic ray
from the base point.  The ray direction is drawn from the deterministic
sequence (1, 0), (1, 1), (1, 2), ... and advanced until no vertex of the
polyline lies on the ray's supporting line and no segment is parallel to it;
after that every crossing is a transverse interior one and the count is a
plain sum of signs.

A partial winding is carried exactly as an ExactTurn: an integer part plus
the oriented angle between two stored direction vectors.  The fractional
parts are never evaluated numerically; sums of ExactTurns are closed using
sign predicates only (see `wrap_count`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import GeometryError, Point2, Segment, point_on_segment, sign

# Classification of the oriented angle between two nonzero vectors.
ANGLE_ZERO = "zero"          # t = 0
ANGLE_INTERIOR = "interior"  # 0 < |t| < pi
ANGLE_STRAIGHT = "straight"  # t = pi (positive by the (-pi, pi] convention)


class PointOnPolylineError(GeometryError):
    """Base point lies on the polyline; winding undefined."""

    def __init__(self, point, segment):
        self.point = point
        self.segment = segment
        super().__init__(f"point {point} lies on polyline segment {segment}")


@dataclass(frozen=True)
class Polyline:
    vertices: tuple

    def __init__(self, vertices: Iterable[Point2]):
        vs = tuple(vertices)
        if not vs:
            raise GeometryError("polyline needs at least one vertex")
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise GeometryError(f"repeated consecutive vertex {a}")
        object.__setattr__(self, "vertices", vs)

    @property
    def start(self) -> Point2:
        return self.vertices[0]

    @property
    def end(self) -> Point2:
        return self.vertices[-1]

    def segments(self):
        return [Segment(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def reversed(self) -> "Polyline":
        return Polyline(reversed(self.vertices))

    def concat(self, other: "Polyline") -> "Polyline":
        """Join at a shared endpoint (this end == other start)."""
        if self.end != other.start:
            raise GeometryError("polylines do not chain")
        return Polyline(self.vertices + other.vertices[1:])

    def contains_point(self, p: Point2) -> bool:
        if len(self.vertices) == 1:
            return p == self.vertices[0]
        return any(point_on_segment(p, s) for s in self.segments())

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class ClosedPolyline:
    vertices: tuple

    def __init__(self, vertices: Iterable[Point2]):
        vs = tuple(vertices)
        if not vs:
            raise GeometryError("closed polyline needs at least one vertex")
        if len(vs) > 1:
            for i, a in enumerate(vs):
                if a == vs[(i + 1) % len(vs)]:
                    raise GeometryError(f"repeated consecutive vertex {a}")
        object.__setattr__(self, "vertices", vs)

    def segments(self):
        vs = self.vertices
        if len(vs) == 1:
            return []
        return [Segment(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def reversed(self) -> "ClosedPolyline":
        return ClosedPolyline(reversed(self.vertices))

    def contains_point(self, p: Point2) -> bool:
        if len(self.vertices) == 1:
            return p == self.vertices[0]
        return any(point_on_segment(p, s) for s in self.segments())

    def to_open(self) -> Polyline:
        """The open traversal v0 ... vn v0."""
        return Polyline(self.vertices + (self.vertices[0],))

    def __len__(self):
        return len(self.vertices)


def reverse(p: Polyline) -> Polyline:
    return p.reversed()


@dataclass(frozen=True)
class ExactTurn:
    """Partial winding value  whole + angle(from_dir -> to_dir) / 2pi.

    The oriented angle lives in (-pi, pi]; both directions are nonzero
    rational vectors (base-point relative), so the value is exact.
    """

    whole: int
    from_dir: Point2
    to_dir: Point2

    def __post_init__(self):
        if self.from_dir.is_zero() or self.to_dir.is_zero():
            raise GeometryError("ExactTurn directions must be nonzero")

    def negated(self) -> "ExactTurn":
        """The turn of the reversed path: value negates exactly."""
        s, kind = angle_sign(self.from_dir, self.to_dir)
        extra = -1 if kind == ANGLE_STRAIGHT else 0
        return ExactTurn(-self.whole + extra, self.to_dir, self.from_dir)

    def approx(self) -> float:
        """Float value, for oracles and display only."""
        import math

        a0 = math.atan2(float(self.from_dir.y), float(self.from_dir.x))
        a1 = math.atan2(float(self.to_dir.y), float(self.to_dir.x))
        t = a1 - a0
        while t <= -math.pi:
            t += 2 * math.pi
        while t > math.pi:
            t -= 2 * math.pi
        return self.whole + t / (2 * math.pi)


def angle_sign(v: Point2, w: Point2):
    """Sign and coarse class of the oriented angle from v to w, in (-pi, pi].

    Returns (sign, kind); the straight angle pi counts as positive.
    """
    if v.is_zero() or w.is_zero():
        raise GeometryError("zero direction vector")
    c = sign(v.cross(w))
    if c != 0:
        return c, ANGLE_INTERIOR
    if v.dot(w) > 0:
        return 0, ANGLE_ZERO
    return 1, ANGLE_STRAIGHT


def oriented_angle_sign(a: Point2, o: Point2, b: Point2):
    """Sign / class of the angle at o from ray o->a to ray o->b."""
    if a == o or b == o:
        raise GeometryError("angle endpoint coincides with the apex")
    return angle_sign(a - o, b - o)


def _pseudo_stratum(ref: Point2, v: Point2) -> int:
    """Which part of [0, 2pi) the ccw angle from ref to v falls in.

    0: angle 0;  1: (0, pi);  2: pi;  3: (pi, 2pi).
    """
    c = sign(ref.cross(v))
    if c > 0:
        return 1
    if c < 0:
        return 3
    return 0 if ref.dot(v) > 0 else 2


def ccw_less(ref: Point2, v: Point2, w: Point2) -> bool:
    """Compare ccw angles from ref: angle(v) < angle(w), both in [0, 2pi)."""
    sv, sw = _pseudo_stratum(ref, v), _pseudo_stratum(ref, w)
    if sv != sw:
        return sv < sw
    if sv in (0, 2):
        return False  # equal angles
    return sign(v.cross(w)) > 0


def wrap_count(ref: Point2, v: Point2, w: Point2) -> int:
    """Integer c with  angle(v->w) = u(w) - u(v) + 2pi*c,  u = ccw angle from ref.

    Everything is decided by sign predicates; no angles are evaluated.
    """
    s, kind = angle_sign(v, w)
    if kind == ANGLE_ZERO:
        return 0
    if kind == ANGLE_STRAIGHT:
        return 1 if ccw_less(ref, w, v) else 0
    if s > 0:  # angle in (0, pi)
        return 1 if ccw_less(ref, w, v) else 0
    # angle in (-pi, 0)
    return -1 if ccw_less(ref, v, w) else 0


def _generic_ray_direction(o: Point2, points: Sequence[Point2], dirs: Sequence[Point2]) -> Point2:
    """Direction (1, k) whose supporting line through o avoids every point
    and is parallel to none of the given directions."""
    budget = len(points) + len(dirs) + 2
    for k in range(budget):
        d = Point2(Fraction(1), Fraction(k))
        if any(d.cross(p - o) == 0 for p in points):
            continue
        if any(d.cross(v) == 0 for v in dirs):
            continue
        return d
    raise GeometryError("no generic ray direction found")  # unreachable: budget covers all bad slopes


def _signed_ray_crossings(o: Point2, d: Point2, segments) -> int:
    """Signed crossings of the open ray {o + t d, t > 0} by the segments.

    Requires genericity: no segment endpoint on the line, none parallel.
    A crossing counts +1 when the segment passes left-to-... precisely, the
    sign is that of the far endpoint's side, which makes ccw passages +1.
    """
    total = 0
    for seg in segments:
        sa = sign(d.cross(seg.a - o))
        sb = sign(d.cross(seg.b - o))
        if sa == sb:
            continue
        # Intersection of the segment with the supporting line.
        t = d.cross(seg.a - o) / d.cross(seg.a - seg.b)
        p = seg.a + t * seg.vec
        if d.dot(p - o) > 0:
            total += sb
    return total


def _check_off(polyline, o: Point2):
    if len(polyline.vertices) == 1:
        if polyline.vertices[0] == o:
            raise PointOnPolylineError(o, None)
        return
    for seg in polyline.segments():
        if point_on_segment(o, seg):
            raise PointOnPolylineError(o, seg)


def winding_number(line: ClosedPolyline, o: Point2) -> int:
    """Exact winding number of the closed polyline around o."""
    _check_off(line, o)
    if len(line.vertices) == 1:
        return 0
    segments = line.segments()
    d = _generic_ray_direction(o, line.vertices, [s.vec for s in segments])
    return _signed_ray_crossings(o, d, segments)


def partial_winding(path: Polyline, o: Point2) -> ExactTurn:
    """Exact partial winding of an open path around o, as an ExactTurn."""
    if len(path.vertices) < 2:
        raise GeometryError("partial winding needs at least two vertices")
    _check_off(path, o)
    segments = path.segments()
    d = _generic_ray_direction(o, path.vertices, [s.vec for s in segments])
    n = _signed_ray_crossings(o, d, segments)
    v0 = path.start - o
    v1 = path.end - o
    # 2pi w' = 2pi n + (u1 - u0);  u1 - u0 = angle(v0->v1) - 2pi*wrap.
    whole = n - wrap_count(d, v0, v1)
    return ExactTurn(whole, v0, v1)


def _codirected(v: Point2, w: Point2) -> bool:
    return v.cross(w) == 0 and v.dot(w) > 0


def winding_from_parts(parts: Sequence[ExactTurn]) -> int:
    """Recombine chained partial windings of a full cycle into the integer
    winding number; the endpoint angles telescope to a multiple of 2pi."""
    if not parts:
        raise GeometryError("no parts")
    seq = list(parts)
    for cur, nxt in zip(seq, seq[1:] + [seq[0]]):
        if not _codirected(cur.to_dir, nxt.from_dir):
            raise GeometryError("parts do not chain: direction mismatch")
    ref = seq[0].from_dir
    wraps = sum(wrap_count(ref, t.from_dir, t.to_dir) for t in seq)
    return sum(t.whole for t in seq) + wraps


def turn_sum_whole(turns: Sequence[ExactTurn]) -> int:
    """Sum of the integer parts (the fractional closure is the caller's job)."""
    return sum(t.whole for t in turns)
