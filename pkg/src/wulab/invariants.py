"""Integer and parity invariants of drawings.

Windings of drawn cycles around vertex images, the alternating-sum identity
for maps of the complete graph on four vertices, Radon / van Kampen parities
of general-position maps, and the triodic / cyclic Wu numbers.

The Wu numbers are closed exactly: each of the three partial windings is an
integer part plus a corner angle of the triangle A1 A2 A3, and the three
corner angles sum to +-pi depending on the triangle's orientation.  So

    wu = 2 (k1 + k2 + k3) + orient(A1, A2, A3)

with never a real number in sight.  Collinear corner triples are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import GeometryError, Point2, orient
from .drawing import (
    CycleSpec,
    Drawing,
    Graph,
    NotGeneralPositionError,
    edges_adjacent,
    label_key,
    mod2_interior_contains,
    restriction_to_cycle,
    transverse_crossing_points,
    validate_almost_embedding,
    validate_general_position,
)
from .winding import (
    PointOnPolylineError,
    Polyline,
    partial_winding,
    reverse,
    winding_number,
)


class VertexOnCycleError(GeometryError):
    def __init__(self, vertex, cycle, point):
        self.vertex = vertex
        self.cycle = cycle
        self.point = point
        super().__init__(f"vertex {vertex} lies on the image of cycle {cycle}")


def winding_of_vertex(d: Drawing, cycle: CycleSpec, v: str) -> int:
    """w_f(C, v): winding of the drawn cycle around the image of v."""
    line = restriction_to_cycle(d, cycle)
    p = d.placement[v]
    if line.contains_point(p):
        raise VertexOnCycleError(v, str(cycle), p)
    return winding_number(line, p)


def _complete_on(d: Drawing, n: int) -> bool:
    g = d.graph
    return len(g.vertices) == n and len(g.edges) == n * (n - 1) // 2


def k4_cycles(graph: Graph) -> Dict[str, CycleSpec]:
    """C_j: the cycle on the other three vertices, ascending order."""
    vs = sorted(graph.vertices, key=label_key)
    if len(vs) != 4:
        raise GeometryError("need exactly four vertices")
    return {j: CycleSpec([v for v in vs if v != j]) for j in vs}


def k4_profile(d: Drawing) -> Tuple[int, int, int, int]:
    """(w_f(C_1,1), ..., w_f(C_4,4)) in vertex order."""
    cycles = k4_cycles(d.graph)
    vs = sorted(d.graph.vertices, key=label_key)
    return tuple(winding_of_vertex(d, cycles[j], j) for j in vs)


def k4_alternating_sum(d: Drawing, o: Point2) -> int:
    """Sum of (-1)^j w(f|C_j, o); zero for every map and every off-image o."""
    if not _complete_on(d, 4):
        raise GeometryError("expected a complete graph on four vertices")
    cycles = k4_cycles(d.graph)
    vs = sorted(d.graph.vertices, key=label_key)
    total = 0
    for j, v in enumerate(vs, start=1):
        line = restriction_to_cycle(d, cycles[v])
        total += (-1) ** j * winding_number(line, o)
    return total


def _require_general_position(d: Drawing):
    issues = validate_general_position(d)
    if issues:
        raise NotGeneralPositionError("; ".join(i.detail for i in issues[:3]))


def _non_adjacent_crossing_count(d: Drawing) -> int:
    edges = d.graph.edges_sorted()
    total = 0
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1 :]:
            if edges_adjacent(e1, e2):
                continue
            total += len(transverse_crossing_points(d, e1, e2))
    return total


def radon_number(d: Drawing) -> int:
    """Parity of (non-adjacent crossings) + (vertices inside their opposite
    cycle, mod-2 sense); odd for every general-position map of K4."""
    if not _complete_on(d, 4):
        raise GeometryError("expected a complete graph on four vertices")
    _require_general_position(d)
    total = _non_adjacent_crossing_count(d)
    cycles = k4_cycles(d.graph)
    for v in d.graph.vertices:
        line = restriction_to_cycle(d, cycles[v])
        if mod2_interior_contains(line, d.placement[v]):
            total += 1
    return total % 2


def van_kampen_number(d: Drawing) -> int:
    """Parity of the crossings between images of non-adjacent edges of K5."""
    if not _complete_on(d, 5):
        raise GeometryError("expected a complete graph on five vertices")
    _require_general_position(d)
    return _non_adjacent_crossing_count(d) % 2


# ---------------------------------------------------------------- Wu numbers


@dataclass(frozen=True)
class Triod:
    """Three legs from a common center O to corners A1, A2, A3."""

    center: Point2
    legs: Tuple[Polyline, Polyline, Polyline]

    def __init__(self, center: Point2, legs: Sequence[Polyline]):
        legs = tuple(legs)
        if len(legs) != 3:
            raise GeometryError("a triod has three legs")
        for leg in legs:
            if leg.start != center:
                raise GeometryError("every leg must start at the center")
        corners = [leg.end for leg in legs]
        for i, a in enumerate(corners):
            for j, leg in enumerate(legs):
                if i != j and leg.contains_point(a):
                    raise GeometryError(f"corner A{i+1} lies on leg l{j+1}")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "legs", legs)

    @property
    def corners(self):
        return tuple(leg.end for leg in self.legs)

    def permuted(self, perm: Sequence[int]) -> "Triod":
        return Triod(self.center, [self.legs[i] for i in perm])


@dataclass(frozen=True)
class TriangleChain:
    """Polylines l1: A1->A2, l2: A2->A3, l3: A3->A1 forming a closed line."""

    lines: Tuple[Polyline, Polyline, Polyline]

    def __init__(self, lines: Sequence[Polyline]):
        lines = tuple(lines)
        if len(lines) != 3:
            raise GeometryError("a chain has three polylines")
        for cur, nxt in zip(lines, lines[1:] + lines[:1]):
            if cur.end != nxt.start:
                raise GeometryError("chain polylines do not share endpoints in order")
        corners = tuple(l.start for l in lines)
        for i in range(3):
            if lines[(i + 1) % 3].contains_point(corners[i]):
                raise GeometryError(f"corner A{i+1} lies on l{(i+1)%3+1}")
        object.__setattr__(self, "lines", lines)

    @property
    def corners(self):
        return tuple(l.start for l in self.lines)


def _wu_orientation(a1: Point2, a2: Point2, a3: Point2) -> int:
    s = orient(a1, a2, a3)
    if s == 0:
        raise GeometryError("collinear corners: Wu number degenerate")
    return s


def triodic_wu(t: Triod) -> int:
    """Odd integer 2(k1+k2+k3) + orientation of the corner triangle."""
    l1, l2, l3 = t.legs
    a1, a2, a3 = t.corners
    k1 = partial_winding(reverse(l2).concat(l3), a1).whole
    k2 = partial_winding(reverse(l1).concat(l2), a3).whole
    k3 = partial_winding(reverse(l3).concat(l1), a2).whole
    return 2 * (k1 + k2 + k3) + _wu_orientation(a1, a2, a3)


def cyclic_wu(c: TriangleChain) -> int:
    """Odd integer from the three single-line partial windings."""
    l1, l2, l3 = c.lines
    a1, a2, a3 = c.corners
    k1 = partial_winding(l2, a1).whole
    k2 = partial_winding(l1, a3).whole
    k3 = partial_winding(l3, a2).whole
    return 2 * (k1 + k2 + k3) + _wu_orientation(a1, a2, a3)


def triodic_wu_float(t: Triod) -> float:
    """Float oracle (atan2 accumulation); tests only."""
    from .approx import partial_winding_float as pwf

    l1, l2, l3 = t.legs
    a1, a2, a3 = t.corners
    return 2 * (
        pwf(reverse(l2).concat(l3), a1)
        + pwf(reverse(l1).concat(l2), a3)
        + pwf(reverse(l3).concat(l1), a2)
    )


def cyclic_wu_float(c: TriangleChain) -> float:
    from .approx import partial_winding_float as pwf

    l1, l2, l3 = c.lines
    a1, a2, a3 = c.corners
    return 2 * (pwf(l2, a1) + pwf(l1, a3) + pwf(l3, a2))


def drawing_triangle_chain(d: Drawing, u: str, v: str, w: str) -> TriangleChain:
    """The chain f|_uv, f|_vw, f|_wu of a drawn triangle."""
    return TriangleChain([d.edge_line(u, v), d.edge_line(v, w), d.edge_line(w, u)])


def drawing_triod(d: Drawing, center: str, tips: Sequence[str]) -> Triod:
    """The triod of edges from a center vertex to three tips."""
    legs = [d.edge_line(center, t) for t in tips]
    return Triod(d.placement[center], legs)


# ---------------------------------------------------------------- profiles


@dataclass
class InvariantProfile:
    entries: Dict[Tuple[Tuple[str, ...], str], int] = field(default_factory=dict)

    def key(self):
        return frozenset(self.entries.items())

    def to_dict(self):
        items = sorted(
            self.entries.items(),
            key=lambda kv: (kv[0][0], label_key(kv[0][1])),
        )
        return {
            "entries": [
                {"cycle": list(cyc), "vertex": v, "w": w} for (cyc, v), w in items
            ]
        }

    def __eq__(self, other):
        return isinstance(other, InvariantProfile) and self.entries == other.entries


def enumerate_cycles(graph: Graph, cap: int = 64) -> List[CycleSpec]:
    """All simple cycles, canonically oriented, in deterministic order.

    Canonical form: smallest vertex first, and the second vertex smaller than
    the last (each cycle listed exactly once, in one orientation).
    """
    vs = sorted(graph.vertices, key=label_key)
    order = {v: i for i, v in enumerate(vs)}
    found: List[CycleSpec] = []

    def extend(path, start):
        if len(found) >= cap:
            return
        last = path[-1]
        for nxt in graph.neighbors(last):
            if len(found) >= cap:
                return
            if nxt == start and len(path) >= 3:
                if order[path[1]] < order[path[-1]]:
                    found.append(CycleSpec(path))
                continue
            if nxt in path or order[nxt] <= order[start]:
                continue
            extend(path + [nxt], start)

    for s in vs:
        extend([s], s)
    return found[:cap]


def invariant_profile(
    d: Drawing, cycles: Optional[Sequence[CycleSpec]] = None, cap: int = 64
) -> InvariantProfile:
    """w_f(C, v) for each cycle and each vertex whose image avoids it."""
    if cycles is None:
        cycles = enumerate_cycles(d.graph, cap)
    profile = InvariantProfile()
    for cyc in cycles:
        cyc.validate(d.graph)
        line = restriction_to_cycle(d, cyc)
        for v in d.graph.vertices:
            if v in cyc.labels:
                continue
            p = d.placement[v]
            if line.contains_point(p):
                continue
            profile.entries[(cyc.labels, v)] = winding_number(line, p)
    return profile


# ---------------------------------------------------------------- theorem checking


@dataclass
class TheoremEntry:
    id: str
    applicable: bool
    passed: Optional[bool]
    values: dict
    expected: str
    reason: Optional[str] = None

    def to_dict(self):
        out = {
            "id": self.id,
            "applicable": self.applicable,
            "pass": self.passed,
            "values": self.values,
            "expected": self.expected,
        }
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class TheoremReport:
    shape: str
    almost_embedding: bool
    entries: List[TheoremEntry]

    def to_dict(self):
        return {
            "shape": self.shape,
            "almost_embedding": self.almost_embedding,
            "statements": [e.to_dict() for e in self.entries],
        }

    def entry(self, id_: str) -> TheoremEntry:
        for e in self.entries:
            if e.id == id_:
                return e
        raise KeyError(id_)


def _k5_minus_edge_roles(g: Graph):
    """For a complete 5-graph minus one edge: (role4, role5, cycle)."""
    vs = sorted(g.vertices, key=label_key)
    missing = [
        (vs[i], vs[j])
        for i in range(5)
        for j in range(i + 1, 5)
        if not g.has_edge(vs[i], vs[j])
    ]
    if len(vs) != 5 or len(missing) != 1 or len(g.edges) != 9:
        return None
    a, b = missing[0]
    others = [v for v in vs if v not in (a, b)]
    return a, b, CycleSpec(others)


def _k33_minus_edge_roles(g: Graph):
    """For complete bipartite 3x3 minus one edge: (a, b, four-cycle)."""
    vs = sorted(g.vertices, key=label_key)
    plain = [v for v in vs if not v.endswith("'")]
    primed = [v for v in vs if v.endswith("'")]
    if len(plain) != 3 or len(primed) != 3 or len(g.edges) != 8:
        return None
    missing = [(u, v) for u in plain for v in primed if not g.has_edge(u, v)]
    if len(missing) != 1:
        return None
    a, b = missing[0]
    rest_plain = [v for v in plain if v != a]
    rest_primed = [v for v in primed if v != b]
    # Orientation convention: remaining unprimed vertices in increasing order.
    cycle = CycleSpec([rest_plain[0], rest_primed[0], rest_plain[1], rest_primed[1]])
    return a, b, cycle


def check_theorems(d: Drawing) -> TheoremReport:
    """Evaluate the applicable invariant statements for the drawing's shape."""
    ae = validate_almost_embedding(d).ok
    entries: List[TheoremEntry] = []

    def guarded(id_, expected, compute):
        try:
            values, passed = compute()
        except (GeometryError, PointOnPolylineError) as exc:
            entries.append(TheoremEntry(id_, False, None, {}, expected, reason=str(exc)))
            return
        if not ae:
            entries.append(
                TheoremEntry(
                    id_, False, None, values, expected, reason="not an almost embedding"
                )
            )
            return
        entries.append(TheoremEntry(id_, True, passed, values, expected))

    if _complete_on(d, 4):
        shape = "k4"
        vs = sorted(d.graph.vertices, key=label_key)

        def thm52():
            profile = k4_profile(d)
            total = sum(profile)
            return {"profile": list(profile), "sum": total}, total % 2 == 1

        guarded("thm5.2", "sum of w_f(C_j, j) is odd", thm52)

        def rel64a():
            chain = drawing_triangle_chain(d, vs[0], vs[1], vs[2])
            triod = drawing_triod(d, vs[3], vs[:3])
            wu_c = cyclic_wu(chain)
            wu_t = triodic_wu(triod)
            w = winding_of_vertex(d, CycleSpec(vs[:3]), vs[3])
            return (
                {"cyclic_wu": wu_c, "triodic_wu": wu_t, "w": w},
                wu_c + wu_t == 2 * w,
            )

        guarded("rel6.4a", "cyclic wu + triodic wu = 2 w_f(123,4)", rel64a)
    elif (roles := _k5_minus_edge_roles(d.graph)) is not None:
        shape = "k5-minus-edge"
        r4, r5, cycle = roles

        def diff():
            w4 = winding_of_vertex(d, cycle, r4)
            w5 = winding_of_vertex(d, cycle, r5)
            return w4, w5

        def thm55a():
            w4, w5 = diff()
            return {"w4": w4, "w5": w5, "difference": w4 - w5}, (w4 - w5) % 2 == 1

        def thm55b():
            w4, w5 = diff()
            return {"w4": w4, "w5": w5, "difference": w4 - w5}, abs(w4 - w5) == 1

        guarded("thm5.5a", "w_f(123,4) - w_f(123,5) is odd", thm55a)
        guarded("thm5.5b", "w_f(123,4) - w_f(123,5) = +-1", thm55b)

        def rel65a():
            w4, w5 = diff()
            tips = list(cycle.labels)
            wu4 = triodic_wu(drawing_triod(d, r4, tips))
            wu5 = triodic_wu(drawing_triod(d, r5, tips))
            return (
                {"wu4": wu4, "wu5": wu5, "w4": w4, "w5": w5},
                wu4 - wu5 == 2 * (w4 - w5),
            )

        guarded("rel6.5a", "wu at 4 - wu at 5 = 2 (w4 - w5)", rel65a)
    elif (roles := _k33_minus_edge_roles(d.graph)) is not None:
        shape = "k33-minus-edge"
        a, b, cycle = roles

        def stmt57a():
            wa = winding_of_vertex(d, cycle, a)
            wb = winding_of_vertex(d, cycle, b)
            return (
                {"cycle": list(cycle.labels), "wa": wa, "wb": wb, "difference": wa - wb},
                (wa - wb) % 2 == 1,
            )

        guarded("stmt5.7a", "w_f(C, a) - w_f(C, b) is odd", stmt57a)
    else:
        shape = "unsupported"

    return TheoremReport(shape, ae, entries)
