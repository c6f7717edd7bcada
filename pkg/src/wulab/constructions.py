"""Canonical base drawings, finger moves, and generators for prescribed invariants.

A finger move splices a guide loop into one edge's polyline at an anchor
point.  The loop is validated exactly before splicing:

  * it must be simple and based at the anchor;
  * it may touch the moved edge only at the anchor;
  * it may not pass through any vertex image, and every contact with another
    edge must be a transverse crossing at segment interiors;
  * in ``preserve`` mode crossings are allowed only with edges adjacent to
    the moved edge (this is what keeps almost embeddings almost embeddings);
    ``map`` mode allows crossing any edge except the moved one.

Guide-loop routing is deliberately minimal: a thin triangular sliver for a
point target, a margin box for segment targets, reached by straight legs
from the anchor.  Repeated moves re-run the router on the grown polyline, so
later loops nest inside earlier ones wherever that is the only free space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import GeometryError, Point2, Segment, orient, rat, segment_intersection
from .drawing import (
    CycleSpec,
    Drawing,
    Graph,
    builtin_graph,
    drawing_to_dict,
    edge_key,
    edges_adjacent,
    is_general_position,
    label_key,
    point_to_json,
    straight_line_drawing,
    validate_almost_embedding,
)
from .invariants import (
    InvariantProfile,
    Triod,
    TriangleChain,
    cyclic_wu,
    enumerate_cycles,
    invariant_profile,
    k4_cycles,
    triodic_wu,
    winding_of_vertex,
)
from .winding import ClosedPolyline, PointOnPolylineError, Polyline, winding_number

FIRST = "first"
SECOND = "second"


class MoveValidationError(GeometryError):
    """Guide loop touches something it must not; message names the witness."""


class RoutingError(GeometryError):
    """No valid guide loop found; message names the last obstruction."""


class ConstructionError(GeometryError):
    """Generator constraint violated or target not reached."""


@dataclass(frozen=True)
class FingerMoveSpec:
    edge: Tuple[str, str]
    anchor: Tuple[int, Fraction]  # (segment index, parameter in (0, 1))
    guide_loop: ClosedPolyline  # based at the anchor point (first vertex)
    move_type: str = FIRST


# ---------------------------------------------------------------- base drawings


def _pts(*coords):
    return [Point2(rat(x), rat(y)) for x, y in coords]


def base_drawing(name: str) -> Drawing:
    """Committed fixtures with exact rational coordinates.

    Regular polygons are replaced by convex rational stand-ins; nothing
    downstream depends on metric regularity.
    """
    key = name.strip().lower()
    if key == "square_diagonals_k4":
        sq = _pts((0, 0), (8, 0), (8, 8), (0, 8))
        return straight_line_drawing(
            builtin_graph("k4"), dict(zip("1234", sq))
        )
    if key == "triangle_center_k4":
        pts = _pts((0, 0), (4, 0), (2, 3), (2, 1))
        return straight_line_drawing(builtin_graph("k4"), dict(zip("1234", pts)))
    if key == "pentagon_k5":
        pts = _pts((0, 4), (-4, 1), (-3, -4), (3, -4), (4, 1))
        return straight_line_drawing(builtin_graph("k5"), dict(zip("12345", pts)))
    if key == "pentagon_k5_minus_45":
        pts = _pts((0, 4), (-4, 1), (-3, -4), (3, -4), (4, 1))
        return straight_line_drawing(builtin_graph("k5-45"), dict(zip("12345", pts)))
    if key == "k5m45_cluster":
        # Vertices 3, 4, 5 clustered on one vertical line; 4 inside triangle
        # 123, 5 outside above.  Almost embedding with w_f(123,4)=1, w_f(123,5)=0.
        pts = _pts((0, 0), (8, 0), (4, 6), (4, 4), (4, 8))
        return straight_line_drawing(builtin_graph("k5-45"), dict(zip("12345", pts)))
    if key == "k33_planar":
        g = builtin_graph("k3,3-33'")
        placement = {
            "1": Point2(rat(0), rat(0)),
            "1'": Point2(rat(4), rat(0)),
            "2": Point2(rat(4), rat(4)),
            "2'": Point2(rat(0), rat(4)),
            "3": Point2(rat(8), rat(2)),
            "3'": Point2(rat(2), rat(2)),
        }
        lines = {
            edge_key(u, v): Polyline([placement[u], placement[v]])
            for (u, v) in g.edges
            if edge_key(u, v) != edge_key("3", "2'")
        }
        lines[edge_key("3", "2'")] = Polyline(
            [placement["3"], Point2(rat(6), rat(6)), placement["2'"]]
        )
        return Drawing(g, placement, lines)
    if key == "cube_planar":
        outer = _pts((0, 0), (12, 0), (12, 12), (0, 12))
        inner = _pts((4, 4), (8, 4), (8, 8), (4, 8))
        placement = dict(zip("12345678", outer + inner))
        return straight_line_drawing(builtin_graph("cube"), placement)
    if key == "octahedron_planar":
        placement = dict(
            zip("123456", _pts((0, 0), (16, 0), (8, 12), (10, 4), (6, 6), (8, 2)))
        )
        return straight_line_drawing(builtin_graph("octahedron"), placement)
    raise GeometryError(f"unknown base drawing: {name}")


def base_triod() -> Triod:
    """Three straight legs from an interior center to the triangle corners."""
    center = Point2(rat(2), rat(1))
    corners = _pts((0, 0), (4, 0), (2, 3))
    return Triod(center, [Polyline([center, c]) for c in corners])


def base_triangle_chain() -> TriangleChain:
    """The sides of the stand-in triangle."""
    a1, a2, a3 = _pts((0, 0), (4, 0), (2, 3))
    return TriangleChain([Polyline([a1, a2]), Polyline([a2, a3]), Polyline([a3, a1])])


# ---------------------------------------------------------------- loop validation


def _simple_closed(loop: ClosedPolyline) -> Optional[str]:
    """None if simple; otherwise a description of the self-contact."""
    segs = loop.segments()
    n = len(segs)
    if n < 3:
        return "loop needs at least three vertices"
    for i in range(n):
        for j in range(i + 1, n):
            got = segment_intersection(segs[i], segs[j])
            if got is None:
                continue
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                shared = segs[i].b if j == i + 1 else segs[i].a
                if got == shared:
                    continue
                return f"consecutive loop segments overlap near {got}"
            return f"loop self-intersects at {got}"
    return None


def _anchor_point(line: Polyline, anchor) -> Point2:
    i, t = anchor
    segs = line.segments()
    if not (0 <= i < len(segs)):
        raise MoveValidationError(f"anchor segment {i} out of range")
    t = rat(t)
    if not (0 < t < 1):
        raise MoveValidationError("anchor parameter must be strictly inside the segment")
    return segs[i].a + t * segs[i].vec


def _validate_loop_contacts(
    loop: ClosedPolyline,
    anchor_pt: Point2,
    moved_segments: Sequence[Segment],
    other_paths: Sequence[Tuple[str, Polyline, bool]],
    forbidden_points: Dict[str, Point2],
):
    """Exact contact rules for a guide loop.

    other_paths entries are (name, polyline, may_cross); forbidden_points are
    point features the loop must avoid entirely.
    """
    err = _simple_closed(loop)
    if err:
        raise MoveValidationError(err)
    if loop.vertices[0] != anchor_pt:
        raise MoveValidationError("loop must start at the anchor point")
    loop_segs = loop.segments()
    loop_vertices = set(loop.vertices)

    for label, p in forbidden_points.items():
        if loop.contains_point(p):
            raise MoveValidationError(f"loop passes through {label} at {p}")

    for k, ls in enumerate(loop_segs):
        for ms in moved_segments:
            got = segment_intersection(ls, ms)
            if got is None:
                continue
            anchored_end = k in (0, len(loop_segs) - 1)
            if got == anchor_pt and anchored_end:
                continue
            raise MoveValidationError(f"loop touches the moved edge at {got}")

    for name, path, may_cross in other_paths:
        path_vertices = set(path.vertices)
        for ls in loop_segs:
            for ps in path.segments():
                got = segment_intersection(ls, ps)
                if got is None:
                    continue
                if isinstance(got, Segment):
                    raise MoveValidationError(f"loop overlaps {name} along a segment")
                if not may_cross:
                    raise MoveValidationError(f"loop crosses non-adjacent {name} at {got}")
                if got in loop_vertices or got in path_vertices:
                    raise MoveValidationError(
                        f"non-transverse contact with {name} at vertex {got}"
                    )


def _drawing_contact_table(d: Drawing, moved_key, mode: str):
    others = []
    for e in d.graph.edges_sorted():
        if e == moved_key:
            continue
        may_cross = mode == "map" or edges_adjacent(e, moved_key)
        others.append(("edge " + "-".join(e), d.edge_lines[e], may_cross))
    forbidden = {f"vertex {v}": p for v, p in d.placement.items()}
    return others, forbidden


def _splice(line: Polyline, anchor, loop: ClosedPolyline, move_type: str) -> Polyline:
    i, t = anchor
    a = _anchor_point(line, anchor)
    interior = list(loop.vertices[1:])
    if move_type == SECOND:
        interior.reverse()
    elif move_type != FIRST:
        raise MoveValidationError(f"unknown move type {move_type!r}")
    vs = list(line.vertices)
    return Polyline(vs[: i + 1] + [a] + interior + [a] + vs[i + 1 :])


def finger_move(d: Drawing, spec: FingerMoveSpec, mode: str = "preserve") -> Drawing:
    """Reroute one edge through the guide loop at the anchor.

    For every point p strictly inside the loop, windings of cycles through
    the moved edge change by +-winding(loop, p); everything else is untouched.
    """
    key = edge_key(*spec.edge)
    if key not in d.graph.edges:
        raise MoveValidationError(f"no edge {spec.edge} in the drawing")
    line = d.edge_lines[key]
    a = _anchor_point(line, spec.anchor)
    others, forbidden = _drawing_contact_table(d, key, mode)
    _validate_loop_contacts(spec.guide_loop, a, line.segments(), others, forbidden)
    return d.with_edge_line(*key, _splice(line, spec.anchor, spec.guide_loop, spec.move_type))


# ---------------------------------------------------------------- routeing


_ANCHOR_PARAMS = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 5), Fraction(4, 5)]
_SHRINKS = [Fraction(1, 4) ** k for k in range(1, 9)]
# Distinct x/y margin ratios keep box corners off diagonal edges.
_MARGIN_RATIOS = [(Fraction(1), Fraction(5, 7)), (Fraction(5, 7), Fraction(1)), (Fraction(1), Fraction(1)), (Fraction(3, 11), Fraction(1)), (Fraction(1), Fraction(3, 11))]


def _shrink_ladder(level: int):
    """Shrink factors starting at the hinted nesting level."""
    level = min(level, len(_SHRINKS) - 1)
    return _SHRINKS[level:] + _SHRINKS[:level]


def _sliver_loop(a: Point2, p: Point2, s: Fraction) -> ClosedPolyline:
    """Thin ccw triangle from a past p; winds +1 around p."""
    u = p - a
    n = u.perp()
    b1 = p + s * (u + n)
    b2 = p + s * (u - n)
    return ClosedPolyline([a, b2, b1])


def _box_loop(a: Point2, lo: Point2, hi: Point2, order: int) -> ClosedPolyline:
    corners = [
        Point2(lo.x, lo.y),
        Point2(hi.x, lo.y),
        Point2(hi.x, hi.y),
        Point2(lo.x, hi.y),
    ]
    rot, flip = divmod(order, 2)
    seq = corners[rot:] + corners[:rot]
    if flip:
        seq = list(reversed(seq))
    return ClosedPolyline([a] + seq)


def _loop_winding_ok(loop, inside_pts, outside_pts) -> bool:
    try:
        ws = [winding_number(loop, p) for p in inside_pts]
        if any(abs(w) != 1 for w in ws) or len(set(ws)) > 1:
            return False
        return all(winding_number(loop, q) == 0 for q in outside_pts)
    except PointOnPolylineError:
        return False


def _route_drawing_loop(d, key, inside_pts, outside_pts, candidates, mode, hint=None, budget=4000):
    """Try anchor x loop candidates until one validates; else RoutingError.

    hint = {"anchors": [segment indices to try first], "level": shrink level}
    lets repeated moves nest inside their predecessor without rescanning.
    """
    line = d.edge_lines[key]
    others, forbidden = _drawing_contact_table(d, key, mode)
    moved_segments = line.segments()
    order = list(range(len(moved_segments)))
    level = 0
    if hint:
        level = hint.get("level", 0)
        pref = [i for i in hint.get("anchors") or [] if 0 <= i < len(order)]
        order = pref + [i for i in order if i not in pref]
    last_reason = "no candidates"
    tried = 0
    for i in order:
        for t in _ANCHOR_PARAMS:
            a = moved_segments[i].a + t * moved_segments[i].vec
            if any(a == p for p in inside_pts):
                continue
            for loop in candidates(a, level):
                if loop is None:
                    continue
                tried += 1
                if tried > budget:
                    raise RoutingError(f"routing budget exhausted: {last_reason}")
                if not _loop_winding_ok(loop, inside_pts, outside_pts):
                    continue
                try:
                    _validate_loop_contacts(loop, a, moved_segments, others, forbidden)
                except MoveValidationError as exc:
                    last_reason = str(exc)
                    continue
                return (i, t), loop
    raise RoutingError(f"no valid guide loop: {last_reason}")


def guide_loop_around_point(
    d: Drawing, edge: Tuple[str, str], target: Point2, mode: str = "preserve", hint=None, budget=4000
) -> FingerMoveSpec:
    """Sliver loop from the edge around a free point (not a vertex image)."""
    key = edge_key(*edge)
    outside = list(d.placement.values())

    def candidates(a, level):
        if a == target:
            return
        for s in _shrink_ladder(level):
            yield _sliver_loop(a, target, s)

    anchor, loop = _route_drawing_loop(d, key, [target], outside, candidates, mode, hint, budget)
    return FingerMoveSpec(key, anchor, loop, FIRST)


def guide_loop_around_vertex(
    d: Drawing, edge: Tuple[str, str], v: str, mode: str = "preserve", hint=None, budget=4000
) -> FingerMoveSpec:
    """Sliver loop from the edge around the image of vertex v."""
    key = edge_key(*edge)
    if v in key:
        raise RoutingError("cannot loop an edge around its own endpoint")
    target = d.placement[v]
    outside = [p for w, p in d.placement.items() if w != v]

    def candidates(a, level):
        if a == target:
            return
        for s in _shrink_ladder(level):
            yield _sliver_loop(a, target, s)

    anchor, loop = _route_drawing_loop(d, key, [target], outside, candidates, mode, hint, budget)
    return FingerMoveSpec(key, anchor, loop, FIRST)


def guide_loop_around_points(
    d: Drawing, edge: Tuple[str, str], targets: Sequence[str], mode: str = "preserve", hint=None, budget=4000
) -> FingerMoveSpec:
    """Margin-box loop enclosing the given vertices and every edge joining them."""
    key = edge_key(*edge)
    targets = list(targets)
    if any(v in key for v in targets):
        raise RoutingError("cannot enclose an endpoint of the moved edge")
    pts = [d.placement[v] for v in targets]
    for e in d.graph.edges_sorted():
        if e[0] in targets and e[1] in targets:
            pts.extend(d.edge_lines[e].vertices)
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    inside = [d.placement[v] for v in targets]
    outside = [p for w, p in d.placement.items() if w not in targets]
    span = max(max(xs) - min(xs), max(ys) - min(ys), rat(1))

    def candidates(a, level):
        for s in _shrink_ladder(level):
            for rx, ry in _MARGIN_RATIOS:
                mx, my = span * s * rx, span * s * ry
                lo = Point2(min(xs) - mx, min(ys) - my)
                hi = Point2(max(xs) + mx, max(ys) + my)
                if lo.x < a.x < hi.x and lo.y < a.y < hi.y:
                    continue  # anchor inside the box: legs cannot be simple
                for order in range(8):
                    yield _box_loop(a, lo, hi, order)

    anchor, loop = _route_drawing_loop(d, key, inside, outside, candidates, mode, hint, budget)
    return FingerMoveSpec(key, anchor, loop, FIRST)


def guide_loop_around_segment(
    d: Drawing, edge: Tuple[str, str], seg_edge: Tuple[str, str], mode: str = "preserve", hint=None, budget=4000
) -> FingerMoveSpec:
    """Loop enclosing the whole image of another edge (both endpoints included)."""
    return guide_loop_around_points(d, edge, list(edge_key(*seg_edge)), mode, hint, budget)


# ---------------------------------------------------------------- drive helpers


def _nest_hint(spec: FingerMoveSpec, level: int) -> dict:
    """Anchor hint pointing at the far side of the just-spliced loop."""
    i, _ = spec.anchor
    k = len(spec.guide_loop.vertices) - 1
    far = i + 1 + (k + 1) // 2
    return {"anchors": [far, far - 1, far + 1], "level": level}


def _drive_moves(d: Drawing, route, measure, target: int, mode: str, max_steps=64) -> Drawing:
    """Apply routed finger moves until measure(d) == target.

    The per-move sign is discovered by probing; every move shifts the measure
    by exactly +-1 (router guarantees clean unit enclosures).  Successive
    moves are hinted to nest inside their predecessor.
    """
    cur = measure(d)
    move_type = None
    steps = 0
    hint = None
    while cur != target:
        if steps >= max_steps:
            raise ConstructionError("move budget exhausted")
        spec = route(d, hint)
        if move_type is None:
            probe = finger_move(d, spec, mode)
            delta = measure(probe) - cur
            if abs(delta) != 1:
                raise ConstructionError(f"probe move shifted the measure by {delta}")
            need = 1 if target > cur else -1
            move_type = FIRST if delta == need else SECOND
            if delta == need:
                d, cur = probe, cur + delta
                steps += 1
                hint = _nest_hint(spec, steps)
                continue
        spec = FingerMoveSpec(spec.edge, spec.anchor, spec.guide_loop, move_type)
        nxt = finger_move(d, spec, mode)
        delta = measure(nxt) - cur
        if abs(delta) != 1:
            raise ConstructionError(f"move shifted the measure by {delta}")
        if (delta > 0) != (target > cur):
            raise ConstructionError("move went the wrong way")
        d, cur = nxt, cur + delta
        steps += 1
        hint = _nest_hint(spec, steps)
    return d


def _require_ae(d: Drawing, label: str) -> Drawing:
    report = validate_almost_embedding(d)
    if not report.ok:
        raise ConstructionError(
            f"{label}: expected an almost embedding, got {report.violations[0].describe()}"
        )
    return d


def relabel_drawing(d: Drawing, mapping: Dict[str, str]) -> Drawing:
    def m(v):
        return mapping.get(v, v)

    g = Graph([m(v) for v in d.graph.vertices], [(m(u), m(v)) for u, v in d.graph.edges], kind=d.graph.kind)
    placement = {m(v): p for v, p in d.placement.items()}
    lines = {edge_key(m(u), m(v)): line for (u, v), line in d.edge_lines.items()}
    return Drawing(g, placement, lines)


# ---------------------------------------------------------------- generators


@dataclass
class Generated:
    family: str
    params: dict
    drawing: Optional[Drawing] = None
    triod: Optional[Triod] = None
    chain: Optional[TriangleChain] = None
    marked_point: Optional[Point2] = None
    claims: dict = field(default_factory=dict)

    def to_dict(self):
        out = {"family": self.family, "params": self.params, "claims": self.claims}
        if self.drawing is not None:
            out["drawing"] = drawing_to_dict(self.drawing)
        if self.triod is not None:
            out["triod"] = {
                "center": point_to_json(self.triod.center),
                "legs": [[point_to_json(p) for p in leg.vertices] for leg in self.triod.legs],
            }
        if self.chain is not None:
            out["chain"] = {
                "lines": [[point_to_json(p) for p in l.vertices] for l in self.chain.lines]
            }
        if self.marked_point is not None:
            out["marked_point"] = point_to_json(self.marked_point)
        return out


def _w_measure(cycle: CycleSpec, v: str):
    return lambda d: winding_of_vertex(d, cycle, v)


def generate_map_k4_windings(n1: int, n2: int, n3: int, n4: int) -> Generated:
    """A map of K4 (not an almost embedding in general) with w_f(C_j, j) = n_j."""
    d = base_drawing("square_diagonals_k4")
    cycles = k4_cycles(d.graph)
    batches = [(("2", "4"), "1", n1), (("1", "3"), "2", n2), (("2", "4"), "3", n3), (("1", "3"), "4", n4)]
    for edge, v, n in batches:
        d = _drive_moves(
            d,
            lambda dd, hint, edge=edge, v=v: guide_loop_around_vertex(dd, edge, v, mode="map", hint=hint),
            _w_measure(cycles[v], v),
            n,
            mode="map",
        )
    profile = tuple(winding_of_vertex(d, cycles[j], j) for j in sorted(d.graph.vertices, key=label_key))
    if profile != (n1, n2, n3, n4):
        raise ConstructionError(f"profile {profile} != target")
    return Generated(
        "map_k4_windings",
        {"n1": n1, "n2": n2, "n3": n3, "n4": n4},
        drawing=d,
        claims={"profile": list(profile), "almost_embedding": False},
    )


def generate_ae_k4_w123_4(n: int) -> Generated:
    """Almost embedding of K4 with w_f(123, 4) = n."""
    d = base_drawing("triangle_center_k4")
    cycle = CycleSpec(["1", "2", "3"])
    d = _drive_moves(
        d,
        lambda dd, hint: guide_loop_around_segment(dd, ("2", "3"), ("1", "4"), hint=hint),
        _w_measure(cycle, "4"),
        n,
        mode="preserve",
    )
    _require_ae(d, "ae_k4_w123_4")
    return Generated("ae_k4_w123_4", {"n": n}, drawing=d, claims={"w_123_4": n})


def generate_ae_k4_windings(n1: int, n2: int, n3: int, n4: int) -> Generated:
    """Almost embedding of K4 with the full prescribed profile.

    Requires the alternating signed sum to be +-1; the -1 case is produced
    from a +1 instance by interchanging vertices 1 and 2.
    """
    alt = -n1 + n2 - n3 + n4
    if alt not in (1, -1):
        raise ConstructionError(f"alternating sum must be +-1, got {alt}")
    if alt == -1:
        inner = generate_ae_k4_windings(n2, n1, -n3, -n4)
        d = relabel_drawing(inner.drawing, {"1": "2", "2": "1"})
        profile = tuple(
            winding_of_vertex(d, k4_cycles(d.graph)[j], j)
            for j in sorted(d.graph.vertices, key=label_key)
        )
        if profile != (n1, n2, n3, n4):
            raise ConstructionError(f"profile {profile} != target after relabel")
        _require_ae(d, "ae_k4_windings")
        return Generated(
            "ae_k4_windings",
            {"n1": n1, "n2": n2, "n3": n3, "n4": n4},
            drawing=d,
            claims={"profile": [n1, n2, n3, n4]},
        )
    d = base_drawing("triangle_center_k4")
    cycles = k4_cycles(d.graph)
    batches = [(("2", "3"), ("1", "4"), "1", n1), (("1", "3"), ("2", "4"), "2", n2), (("1", "2"), ("3", "4"), "3", n3)]
    for edge, seg, v, n in batches:
        d = _drive_moves(
            d,
            lambda dd, hint, edge=edge, seg=seg: guide_loop_around_segment(dd, edge, seg, hint=hint),
            _w_measure(cycles[v], v),
            n,
            mode="preserve",
        )
    profile = tuple(winding_of_vertex(d, cycles[j], j) for j in sorted(d.graph.vertices, key=label_key))
    if profile != (n1, n2, n3, n4):
        raise ConstructionError(f"profile {profile} != target {(n1, n2, n3, n4)}")
    _require_ae(d, "ae_k4_windings")
    return Generated(
        "ae_k4_windings",
        {"n1": n1, "n2": n2, "n3": n3, "n4": n4},
        drawing=d,
        claims={"profile": [n1, n2, n3, n4]},
    )


def generate_ae_k5m45_w123_5(n: int) -> Generated:
    """Almost embedding of K5 minus the edge 45 with w_f(123, 5) = n."""
    d = base_drawing("k5m45_cluster")
    cycle = CycleSpec(["1", "2", "3"])
    d = _drive_moves(
        d,
        lambda dd, hint: guide_loop_around_points(dd, ("1", "2"), ["3", "4", "5"], hint=hint),
        _w_measure(cycle, "5"),
        n,
        mode="preserve",
    )
    _require_ae(d, "ae_k5m45_w123_5")
    w4 = winding_of_vertex(d, cycle, "4")
    return Generated(
        "ae_k5m45_w123_5", {"n": n}, drawing=d, claims={"w_123_5": n, "w_123_4": w4}
    )


def generate_ae_k3_winding(n: int) -> Generated:
    """Almost embedding of K3 avoiding a marked point O with winding n."""
    o = Point2(rat(2), rat(1))
    d = straight_line_drawing(builtin_graph("k3"), dict(zip("123", _pts((0, 0), (4, 0), (2, 3)))))
    cycle = CycleSpec(["1", "2", "3"])

    def measure(dd):
        from .drawing import restriction_to_cycle

        return winding_number(restriction_to_cycle(dd, cycle), o)

    d = _drive_moves(
        d,
        lambda dd, hint: guide_loop_around_point(dd, ("1", "2"), o, hint=hint),
        measure,
        n,
        mode="preserve",
    )
    _require_ae(d, "ae_k3_winding")
    return Generated("ae_k3_winding", {"n": n}, drawing=d, marked_point=o, claims={"w": n})


def generate_ae_k4_morozov() -> Generated:
    """The committed drawing whose alternating signed winding sum is 3."""
    from .figures import fig_8_4

    d = fig_8_4()
    profile = tuple(
        winding_of_vertex(d, k4_cycles(d.graph)[j], j)
        for j in sorted(d.graph.vertices, key=label_key)
    )
    alt = sum((-1) ** j * w for j, w in enumerate(profile, start=1))
    return Generated(
        "ae_k4_morozov",
        {},
        drawing=d,
        claims={"profile": list(profile), "alternating_sum": alt},
    )


# --- triod / chain moves


def _path_finger(
    paths: List[Polyline],
    moved_index: int,
    target: Point2,
    forbidden_points: Dict[str, Point2],
    move_type: str,
    hint: Optional[dict] = None,
):
    """Splice a sliver loop around `target` into paths[moved_index].

    All paths are mutually adjacent (triod legs / chain sides), so crossing
    them transversally is allowed; only point features are off limits.
    Returns (new paths, nesting hint for the next move).
    """
    moved = paths[moved_index]
    segs = moved.segments()
    others = [
        (f"line {i + 1}", p, True) for i, p in enumerate(paths) if i != moved_index
    ]
    order = list(range(len(segs)))
    level = 0
    if hint:
        level = hint.get("level", 0)
        pref = [i for i in hint.get("anchors") or [] if 0 <= i < len(order)]
        order = pref + [i for i in order if i not in pref]
    last_reason = "no candidates"
    for i in order:
        for t in _ANCHOR_PARAMS:
            a = segs[i].a + t * segs[i].vec
            if a == target:
                continue
            for s in _shrink_ladder(level):
                loop = _sliver_loop(a, target, s)
                if not _loop_winding_ok(
                    loop, [target], [p for p in forbidden_points.values() if p != target]
                ):
                    continue
                try:
                    _validate_loop_contacts(loop, a, segs, others, forbidden_points)
                except MoveValidationError as exc:
                    last_reason = str(exc)
                    continue
                out = list(paths)
                out[moved_index] = _splice(moved, (i, t), loop, move_type)
                nxt_hint = _nest_hint(FingerMoveSpec(("x", "y"), (i, t), loop), level + 1)
                return out, nxt_hint
    raise RoutingError(f"no valid guide loop: {last_reason}")


def _drive_path_moves(obj, rebuild, moved_index, target_corner, forbidden_fn, value_fn, target):
    """Drive a triod / chain Wu number to the target via +-2 steps."""
    cur = value_fn(obj)
    move_type = None
    hint = None
    steps = 0
    while cur != target:
        if steps > 64:
            raise ConstructionError("move budget exhausted")
        paths = list(obj.legs if isinstance(obj, Triod) else obj.lines)
        forbidden = forbidden_fn(obj)
        if move_type is None:
            probe_paths, probe_hint = _path_finger(
                paths, moved_index, target_corner(obj), forbidden, FIRST, hint
            )
            probe = rebuild(obj, probe_paths)
            delta = value_fn(probe) - cur
            if abs(delta) != 2:
                raise ConstructionError(f"probe shifted wu by {delta}")
            move_type = FIRST if (delta > 0) == (target > cur) else SECOND
            if (delta > 0) == (target > cur):
                obj, cur, hint = probe, cur + delta, probe_hint
                steps += 1
                continue
        new_paths, hint = _path_finger(
            paths, moved_index, target_corner(obj), forbidden, move_type, hint
        )
        nxt = rebuild(obj, new_paths)
        delta = value_fn(nxt) - cur
        if abs(delta) != 2 or (delta > 0) != (target > cur):
            raise ConstructionError(f"move shifted wu by {delta}")
        obj, cur = nxt, cur + delta
        steps += 1
    return obj


def generate_triod_wu(n: int) -> Generated:
    """Triod whose triodic Wu number is exactly 2n + 1.

    Repeated moves of the first leg around the third corner shift the Wu
    number by +-2 each.
    """
    target = 2 * n + 1
    t = _drive_path_moves(
        base_triod(),
        lambda obj, paths: Triod(obj.center, paths),
        0,
        lambda obj: obj.corners[2],
        lambda obj: {
            "corner A2": obj.corners[1],
            "corner A3": obj.corners[2],
            "center": obj.center,
        },
        triodic_wu,
        target,
    )
    return Generated("triod_wu", {"n": n}, triod=t, claims={"wu": target})


def generate_cycle_wu(n: int) -> Generated:
    """Triangle chain whose cyclic Wu number is exactly 2n + 1.

    Moves of the second side around the first corner shift it by +-2.
    """
    target = 2 * n + 1
    c = _drive_path_moves(
        base_triangle_chain(),
        lambda obj, paths: TriangleChain(paths),
        1,
        lambda obj: obj.corners[0],
        lambda obj: {
            "corner A1": obj.corners[0],
            "corner A2": obj.corners[1],
            "corner A3": obj.corners[2],
        },
        cyclic_wu,
        target,
    )
    return Generated("cycle_wu", {"n": n}, chain=c, claims={"wu": target})


GENERATOR_FAMILIES = {
    "map_k4_windings": ("n1", "n2", "n3", "n4"),
    "ae_k3_winding": ("n",),
    "ae_k4_w123_4": ("n",),
    "ae_k4_windings": ("n1", "n2", "n3", "n4"),
    "ae_k4_morozov": (),
    "ae_k5m45_w123_5": ("n",),
    "triod_wu": ("n",),
    "cycle_wu": ("n",),
}


def generate(family: str, **params) -> Generated:
    table = {
        "map_k4_windings": generate_map_k4_windings,
        "ae_k3_winding": generate_ae_k3_winding,
        "ae_k4_w123_4": generate_ae_k4_w123_4,
        "ae_k4_windings": generate_ae_k4_windings,
        "ae_k4_morozov": generate_ae_k4_morozov,
        "ae_k5m45_w123_5": generate_ae_k5m45_w123_5,
        "triod_wu": generate_triod_wu,
        "cycle_wu": generate_cycle_wu,
    }
    if family not in table:
        raise ConstructionError(f"unknown family: {family}")
    wanted = GENERATOR_FAMILIES[family]
    missing = [k for k in wanted if k not in params]
    extra = [k for k in params if k not in wanted]
    if missing or extra:
        raise ConstructionError(f"family {family} takes {wanted}; missing {missing}, extra {extra}")
    return table[family](**params)


# ---------------------------------------------------------------- random maps


def random_general_position_map(
    g: Graph, seed: int, grid_size: int = 100, bends_per_edge: int = 2, max_attempts: int = 400
) -> Drawing:
    """Deterministic random drawing that passes the general-position check."""
    rng = random.Random(seed)
    for _ in range(max_attempts):
        cells = grid_size
        placement = {}
        used = set()
        ok = True
        for v in g.vertices:
            for _ in range(50):
                p = (rng.randint(0, cells), rng.randint(0, cells))
                if p not in used:
                    used.add(p)
                    placement[v] = Point2(rat(p[0]), rat(p[1]))
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        lines = {}
        try:
            for e in g.edges_sorted():
                pts = [placement[e[0]]]
                for _ in range(bends_per_edge):
                    q = Point2(rat(rng.randint(0, cells)), rat(rng.randint(0, cells)))
                    if q != pts[-1]:
                        pts.append(q)
                if pts[-1] == placement[e[1]]:
                    pts.pop()
                pts.append(placement[e[1]])
                lines[e] = Polyline(pts)
            d = Drawing(g, placement, lines)
        except GeometryError:
            continue
        if is_general_position(d):
            return d
    raise ConstructionError("retry budget exhausted while sampling a general position map")


# ---------------------------------------------------------------- exploration


_EXPLORE_BASES = {
    "k4": "triangle_center_k4",
    "k5m45": "k5m45_cluster",
    "cube": "cube_planar",
    "octahedron": "octahedron_planar",
}


def legal_enclosures(g: Graph) -> List[Tuple[Tuple[str, str], Tuple[str, ...]]]:
    """(moved edge, enclosed vertex set) pairs that can preserve almost
    embeddings: every edge leaving the enclosed set is adjacent to the moved
    edge, and the moved edge stays outside.

    Candidate sets are single vertices, edges, and closed vertex
    neighborhoods; for some graphs (cube, octahedron) the list is empty,
    which is a statement about the graph, not a failure.
    """
    candidates = set()
    for v in g.vertices:
        candidates.add(frozenset([v]))
        candidates.add(frozenset([v] + list(g.neighbors(v))))
    for e in g.edges:
        candidates.add(frozenset(e))
    for e in g.edges:
        candidates.add(frozenset(g.vertices) - frozenset(e))
    out = []
    for moved in g.edges_sorted():
        for group in candidates:
            if set(moved) & group:
                continue
            boundary = [
                e for e in g.edges if len(set(e) & group) == 1
            ]
            if all(edges_adjacent(e, moved) for e in boundary):
                out.append((moved, tuple(sorted(group, key=label_key))))
    out.sort()
    return out


def explore_profiles(graph_name: str, move_budget: int, seed: int, cycle_cap: int = 64):
    """Random finger-move walks from a base almost embedding.

    Returns (profiles, drawings): the set of distinct invariant profiles
    reached (base included) and one witness drawing per profile.  Moves are
    drawn from the combinatorially legal enclosures only; when a graph has
    none (the cube and octahedron from their planar bases), the base profile
    is the whole answer.
    """
    name = graph_name.strip().lower()
    if name not in _EXPLORE_BASES:
        raise ConstructionError(f"exploration supports {sorted(_EXPLORE_BASES)}, not {graph_name}")
    d = _require_ae(base_drawing(_EXPLORE_BASES[name]), "explore base")
    cycles = enumerate_cycles(d.graph, cycle_cap)
    rng = random.Random(seed)
    profiles: Dict[frozenset, InvariantProfile] = {}
    witnesses: Dict[frozenset, Drawing] = {}

    def record(dd):
        prof = invariant_profile(dd, cycles)
        key = prof.key()
        if key not in profiles:
            profiles[key] = prof
            witnesses[key] = dd

    record(d)
    moves = legal_enclosures(d.graph)
    if not moves:
        return list(profiles.values()), list(witnesses.values())

    for _ in range(move_budget):
        moved = None
        for _attempt in range(4):
            e, group = rng.choice(moves)
            try:
                if len(group) == 1:
                    spec = guide_loop_around_vertex(d, e, group[0], budget=400)
                else:
                    spec = guide_loop_around_points(d, e, list(group), budget=400)
                if rng.random() < 0.5:
                    spec = FingerMoveSpec(spec.edge, spec.anchor, spec.guide_loop, SECOND)
                moved = finger_move(d, spec, mode="preserve")
                break
            except (RoutingError, MoveValidationError, GeometryError):
                continue
        if moved is None:
            continue
        if validate_almost_embedding(moved).ok:
            d = moved
            record(d)
    return list(profiles.values()), list(witnesses.values())
