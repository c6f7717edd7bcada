"""Linking numbers of polygonal cycles in 3-space, and the six-point check
that some pair of triangles is linked.

The linking number is half the signed crossing count between the two cycles
in a generic projection.  The projection direction is taken from the
deterministic sequence (k, k^2+1, 1) and advanced until the projection is
generic: distinct vertex images, no vertex over a non-incident segment, no
collinear segment overlaps.  Over/under at each crossing is decided by an
exact depth comparison along the projection direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from .exact import GeometryError, Point2, Point3, Segment, rat, segment_intersection, sign
from .winding import ClosedPolyline  # noqa: F401  (re-exported convenience)


class NotGenericError(GeometryError):
    """Configuration violates the required genericity."""


@dataclass(frozen=True)
class Cycle3:
    vertices: tuple

    def __init__(self, vertices: Iterable[Point3]):
        vs = tuple(vertices)
        if len(vs) < 3:
            raise GeometryError("a 3-space cycle needs at least three vertices")
        for i, a in enumerate(vs):
            if a == vs[(i + 1) % len(vs)]:
                raise GeometryError(f"repeated consecutive vertex {a}")
        object.__setattr__(self, "vertices", vs)

    def segments(self) -> List[Tuple[Point3, Point3]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def reversed(self) -> "Cycle3":
        return Cycle3(tuple(reversed(self.vertices)))


def _segments_intersect_3d(a: Point3, b: Point3, c: Point3, d: Point3) -> bool:
    """Exact closed-segment intersection test in 3-space."""
    u, v, w = b - a, d - c, c - a
    n = u.cross(v)
    if n.dot(n) != 0:
        if w.dot(n) != 0:
            return False  # skew lines
        nn = n.dot(n)
        s = w.cross(v).dot(n) / nn
        t = w.cross(u).dot(n) / nn
        return 0 <= s <= 1 and 0 <= t <= 1
    # parallel lines
    if w.cross(u).dot(w.cross(u)) != 0:
        return False
    uu = u.dot(u)
    t0 = (c - a).dot(u) / uu
    t1 = (d - a).dot(u) / uu
    return max(min(t0, t1), Fraction(0)) <= min(max(t0, t1), Fraction(1))


def cycles_disjoint(c1: Cycle3, c2: Cycle3) -> bool:
    return not any(
        _segments_intersect_3d(a, b, c, d)
        for a, b in c1.segments()
        for c, d in c2.segments()
    )


def _project(p: Point3, a: Fraction, b: Fraction) -> Point2:
    """Project along the direction (a, b, 1) onto the z = 0 plane."""
    return Point2(p.x - a * p.z, p.y - b * p.z)


def _generic_projection(c1: Cycle3, c2: Cycle3, skip: int = 0, budget: int = 64):
    """First generic direction (after skipping `skip` candidates)."""
    all_vertices = list(c1.vertices) + list(c2.vertices)
    seg_lists = [c1.segments(), c2.segments()]
    found = 0
    for k in range(budget * 4):
        a, b = Fraction(k), Fraction(k * k + 1)
        if not _projection_is_generic(all_vertices, seg_lists, a, b):
            continue
        if found == skip:
            return a, b
        found += 1
    raise NotGenericError("generic projection search budget exhausted")


def _projection_is_generic(all_vertices, seg_lists, a, b) -> bool:
    imgs = [_project(p, a, b) for p in all_vertices]
    if len({(q.x, q.y) for q in imgs}) != len(imgs):
        return False
    segs = []
    for which, lst in enumerate(seg_lists):
        for i, (p, q) in enumerate(lst):
            pi, qi = _project(p, a, b), _project(q, a, b)
            if pi == qi:
                return False
            segs.append((which, i, pi, qi))
    # vertex over a non-incident segment
    from .exact import point_on_segment

    for vw, vertex_img in _indexed_vertex_images(seg_lists, a, b):
        for which, i, pi, qi in segs:
            if vw == which and _incident(seg_lists[which], i, vertex_img, a, b):
                continue
            if vertex_img not in (pi, qi) and point_on_segment(vertex_img, Segment(pi, qi)):
                return False
    # collinear overlaps
    for x in range(len(segs)):
        for y in range(x + 1, len(segs)):
            _, _, p1, q1 = segs[x]
            _, _, p2, q2 = segs[y]
            got = segment_intersection(Segment(p1, q1), Segment(p2, q2))
            if isinstance(got, Segment):
                return False
    return True


def _indexed_vertex_images(seg_lists, a, b):
    out = []
    for which, lst in enumerate(seg_lists):
        seen = []
        for p, q in lst:
            if p not in seen:
                seen.append(p)
        for p in seen:
            out.append((which, _project(p, a, b)))
    return out


def _incident(seg_list, i, vertex_img, a, b) -> bool:
    p, q = seg_list[i]
    return vertex_img in (_project(p, a, b), _project(q, a, b))


def linking_number(c1: Cycle3, c2: Cycle3, projection_skip: int = 0) -> int:
    """Half the signed crossing count of the two cycles in a generic projection.

    Sign convention: at each crossing the frame (over direction, under
    direction) counts +1 when positively oriented.
    """
    if not cycles_disjoint(c1, c2):
        raise GeometryError("cycles intersect; linking number undefined")
    a, b = _generic_projection(c1, c2, skip=projection_skip)
    total = 0
    for p3, q3 in c1.segments():
        p1, q1 = _project(p3, a, b), _project(q3, a, b)
        u3 = q3 - p3
        for r3, s3 in c2.segments():
            r1, s1 = _project(r3, a, b), _project(s3, a, b)
            v3 = s3 - r3
            u, v = q1 - p1, s1 - r1
            denom = u.cross(v)
            if denom == 0:
                continue
            w = r1 - p1
            t1 = w.cross(v) / denom
            t2 = w.cross(u) / denom
            if not (0 < t1 < 1 and 0 < t2 < 1):
                if not (0 <= t1 <= 1 and 0 <= t2 <= 1):
                    continue
                raise NotGenericError("projected crossing at a segment endpoint")
            # Points over the same image differ by lambda*(a,b,1); lambda is
            # the z difference, so depth order is the z order.
            z1 = p3.z + t1 * u3.z
            z2 = r3.z + t2 * v3.z
            if z1 == z2:
                raise GeometryError("cycles touch in space")  # unreachable if disjoint
            cross_sign = sign(u.cross(v))
            # (over, under) frame: +1 when positively oriented
            total += cross_sign if z1 > z2 else -cross_sign
    if total % 2 != 0:
        raise NotGenericError("odd raw crossing sum; projection not generic")
    return total // 2


@dataclass(frozen=True)
class SixConfig:
    points: Dict[str, Point3]

    def __init__(self, points: Dict[str, Point3]):
        pts = {str(k): v for k, v in points.items()}
        if sorted(pts) != [str(i) for i in range(1, 7)]:
            raise GeometryError("six points labeled 1..6 required")
        object.__setattr__(self, "points", pts)

    def check_generic(self):
        """No four of the six points coplanar; raises naming the offenders."""
        for quad in combinations(sorted(self.points), 4):
            p, q, r, s = (self.points[k] for k in quad)
            vol = (q - p).cross(r - p).dot(s - p)
            if vol == 0:
                raise NotGenericError(f"points {' '.join(quad)} are coplanar")


def six_config_from_json(data: dict) -> SixConfig:
    try:
        pts = {
            k: Point3(rat(x), rat(y), rat(z)) for k, (x, y, z) in data["points"].items()
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise GeometryError(f"bad six-point JSON: {exc}") from exc
    return SixConfig(pts)


def triangle_splittings() -> List[Tuple[Tuple[str, str, str], Tuple[str, str, str]]]:
    labels = [str(i) for i in range(1, 7)]
    out = []
    for rest in combinations(labels[1:], 2):
        left = ("1",) + rest
        right = tuple(l for l in labels if l not in left)
        out.append((left, right))
    return out


def cgs_report(cfg: SixConfig) -> dict:
    """Linking numbers of all ten triangle pairs, plus the existence flag."""
    cfg.check_generic()
    values = {}
    odd = []
    for left, right in triangle_splittings():
        t1 = Cycle3([cfg.points[k] for k in left])
        t2 = Cycle3([cfg.points[k] for k in right])
        lk = linking_number(t1, t2)
        key = f"{''.join(left)}|{''.join(right)}"
        values[key] = lk
        if lk % 2 != 0:
            odd.append(key)
    return {
        "linking_numbers": values,
        "odd_pairs": sorted(odd),
        "linked_pair_exists": bool(odd),
    }
