"""Graphs, piecewise-linear drawings, and their validity checks.

Vertex labels are strings: plain positive integers "1", "2", ... or primed
copies "1'", "2'" for the second part of a bipartite graph.  An edge is the
unordered pair of its endpoint labels; drawings store one polyline per edge,
normalized to run from the smaller to the larger label (a polyline and its
reversal are the same edge image).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exact import (
    GeometryError,
    Point2,
    Segment,
    point_on_segment,
    rat,
    rat_str,
    segment_intersection,
)
from .winding import (
    ClosedPolyline,
    PointOnPolylineError,
    Polyline,
    _generic_ray_direction,
    winding_number,
)


class NotGeneralPositionError(GeometryError):
    """Operation requires general position and the input is not."""


def label_key(label: str):
    """Sort key: unprimed part first, then by number."""
    primed = label.endswith("'")
    body = label[:-1] if primed else label
    return (primed, int(body)) if body.isdigit() else (primed, 10**9, body)


def edge_key(u: str, v: str) -> Tuple[str, str]:
    if u == v:
        raise GeometryError(f"loop edge at {u}")
    return (u, v) if label_key(u) < label_key(v) else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: frozenset
    kind: Optional[str] = None

    def __init__(self, vertices: Iterable[str], edges: Iterable[Tuple[str, str]], kind=None):
        vs = tuple(sorted({str(v) for v in vertices}, key=label_key))
        es = set()
        for u, v in edges:
            u, v = str(u), str(v)
            if u not in vs or v not in vs:
                raise GeometryError(f"edge {u}-{v} uses unknown vertex")
            es.add(edge_key(u, v))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "kind", kind)

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self.edges

    def neighbors(self, v: str):
        return sorted(
            (u if w == v else w for (u, w) in self.edges if v in (u, w)),
            key=label_key,
        )

    def edges_sorted(self):
        return sorted(self.edges, key=lambda e: (label_key(e[0]), label_key(e[1])))

    def without_edge(self, u: str, v: str) -> "Graph":
        e = edge_key(u, v)
        if e not in self.edges:
            raise GeometryError(f"no edge {u}-{v}")
        return Graph(self.vertices, self.edges - {e})


def edges_adjacent(e1: Tuple[str, str], e2: Tuple[str, str]) -> bool:
    return bool(set(e1) & set(e2))


def complete_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    es = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    return Graph(vs, es, kind=f"k{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    part1 = [str(i) for i in range(1, m + 1)]
    part2 = [f"{j}'" for j in range(1, n + 1)]
    return Graph(part1 + part2, [(u, v) for u in part1 for v in part2], kind=f"k{m},{n}")


def builtin_graph(name: str) -> Graph:
    """Named graphs: k<n>, k<m>,<n>, k<n>-<uv> (alias k<n>m<uv>), cube, octahedron, triod."""
    import re

    raw = name.strip().lower()
    m = re.fullmatch(r"k(\d+)m(\S+)", raw)
    if m:
        raw = f"k{m.group(1)}-{m.group(2)}"
    base, minus = raw.split("-", 1) if "-" in raw else (raw, None)
    if base == "cube":
        outer = ["1", "2", "3", "4"]
        inner = ["5", "6", "7", "8"]
        es = list(zip(outer, outer[1:] + outer[:1]))
        es += list(zip(inner, inner[1:] + inner[:1]))
        es += list(zip(outer, inner))
        return Graph(outer + inner, es, kind="cube")
    if base == "octahedron":
        vs = [str(i) for i in range(1, 7)]
        non = {edge_key("1", "4"), edge_key("2", "5"), edge_key("3", "6")}
        es = [
            (vs[i], vs[j])
            for i in range(6)
            for j in range(i + 1, 6)
            if edge_key(vs[i], vs[j]) not in non
        ]
        return Graph(vs, es, kind="octahedron")
    if base in ("triod", "k3,1", "k31"):
        return Graph(["1", "2", "3", "1'"], [("1'", m) for m in ("1", "2", "3")], kind="triod")
    g = None
    if base.startswith("k"):
        body = base[1:]
        if "," in body:
            m, n = body.split(",")
            g = complete_bipartite(int(m), int(n))
        elif body.isdigit():
            g = complete_graph(int(body))
    if g is None:
        raise GeometryError(f"unknown graph name: {name}")
    if minus:
        u, v = _parse_edge_token(minus)
        g = g.without_edge(u, v)
        object.__setattr__(g, "kind", f"{base}-{minus}")
    return g


def _parse_edge_token(token: str) -> Tuple[str, str]:
    """'45' -> ('4','5');  "33'" -> ('3', "3'")."""
    token = token.strip()
    if "'" in token:
        i = token.index("'")
        # primed label ends at the apostrophe; the rest is the other label
        first, second = token[: i + 1], token[i + 1 :]
        if not second:
            first, second = token[0], token[1:]
        return first, second
    if len(token) == 2:
        return token[0], token[1]
    raise GeometryError(f"cannot parse edge token {token!r}")


@dataclass(frozen=True)
class CycleSpec:
    labels: tuple

    def __init__(self, labels: Iterable[str]):
        ls = tuple(str(x) for x in labels)
        if len(ls) < 3:
            raise GeometryError("cycle needs at least three vertices")
        if len(set(ls)) != len(ls):
            raise GeometryError("cycle vertices must be distinct")
        object.__setattr__(self, "labels", ls)

    def validate(self, graph: Graph):
        for u, v in zip(self.labels, self.labels[1:] + self.labels[:1]):
            if not graph.has_edge(u, v):
                raise GeometryError(f"cycle step {u}-{v} is not an edge")

    def reversed(self) -> "CycleSpec":
        return CycleSpec((self.labels[0],) + tuple(reversed(self.labels[1:])))

    def __str__(self):
        return "".join(self.labels)


class Drawing:
    """A graph together with vertex placements and one polyline per edge."""

    def __init__(self, graph: Graph, placement: Dict[str, Point2], edge_lines: Dict[Tuple[str, str], Polyline]):
        self.graph = graph
        self.placement = {str(k): v for k, v in placement.items()}
        lines = {}
        for v in graph.vertices:
            if v not in self.placement:
                raise GeometryError(f"missing placement for vertex {v}")
        for e in graph.edges:
            raw = None
            for key in (e, (e[1], e[0])):
                if key in edge_lines:
                    raw = edge_lines[key]
                    break
            if raw is None:
                raise GeometryError(f"missing polyline for edge {e[0]}-{e[1]}")
            pu, pv = self.placement[e[0]], self.placement[e[1]]
            if raw.start == pu and raw.end == pv:
                lines[e] = raw
            elif raw.start == pv and raw.end == pu:
                lines[e] = raw.reversed()
            else:
                raise GeometryError(f"edge {e[0]}-{e[1]} polyline does not join its endpoints")
        self.edge_lines = lines

    def edge_line(self, u: str, v: str) -> Polyline:
        """The edge's polyline oriented u -> v."""
        e = edge_key(u, v)
        line = self.edge_lines[e]
        return line if e == (u, v) else line.reversed()

    def with_edge_line(self, u: str, v: str, line: Polyline) -> "Drawing":
        new_lines = dict(self.edge_lines)
        new_lines[edge_key(u, v)] = line
        return Drawing(self.graph, self.placement, new_lines)

    def with_placement(self, updates: Dict[str, Point2], edge_lines: Dict[Tuple[str, str], Polyline]) -> "Drawing":
        pl = dict(self.placement)
        pl.update(updates)
        lines = dict(self.edge_lines)
        lines.update(edge_lines)
        return Drawing(self.graph, pl, lines)

    def indexed_segments(self):
        """All (edge, segment_index, Segment) triples, in deterministic order."""
        out = []
        for e in self.graph.edges_sorted():
            for i, s in enumerate(self.edge_lines[e].segments()):
                out.append((e, i, s))
        return out

    def diameter_bound(self):
        """Max coordinate spread; rational, used to scale clearances."""
        xs = [p.x for line in self.edge_lines.values() for p in line.vertices]
        ys = [p.y for line in self.edge_lines.values() for p in line.vertices]
        return max(max(xs) - min(xs), max(ys) - min(ys))


def straight_line_drawing(graph: Graph, placement: Dict[str, Point2]) -> Drawing:
    """Every edge drawn as the straight segment between its endpoints."""
    lines = {
        e: Polyline([placement[e[0]], placement[e[1]]]) for e in graph.edges
    }
    return Drawing(graph, placement, lines)


def restriction_to_cycle(d: Drawing, cycle: CycleSpec) -> ClosedPolyline:
    """The closed polyline formed by the cycle's edge polylines, in order."""
    cycle.validate(d.graph)
    pts: List[Point2] = []
    labels = cycle.labels
    for u, v in zip(labels, labels[1:] + labels[:1]):
        line = d.edge_line(u, v)
        pts.extend(line.vertices[:-1])
    return ClosedPolyline(pts)


# ---------------------------------------------------------------- violations


@dataclass(frozen=True)
class NonAdjacentEdgesIntersect:
    edge1: Tuple[str, str]
    edge2: Tuple[str, str]
    witness: object  # Point2 or Segment

    def describe(self) -> str:
        w = self.witness
        at = f"({rat_str(w.x)}, {rat_str(w.y)})" if isinstance(w, Point2) else "an overlap"
        return f"non-adjacent edges {'-'.join(self.edge1)} and {'-'.join(self.edge2)} intersect at {at}"


@dataclass(frozen=True)
class VertexOnNonAdjacentEdge:
    vertex: str
    edge: Tuple[str, str]
    witness: Point2

    def describe(self) -> str:
        return f"vertex {self.vertex} lies on non-adjacent edge {'-'.join(self.edge)}"


@dataclass(frozen=True)
class CoincidentVertices:
    vertex1: str
    vertex2: str

    def describe(self) -> str:
        return f"vertices {self.vertex1} and {self.vertex2} coincide"


@dataclass
class ViolationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self):
        out = []
        for v in self.violations:
            entry = {"kind": type(v).__name__, "text": v.describe()}
            if isinstance(v, NonAdjacentEdgesIntersect):
                entry["edges"] = ["-".join(v.edge1), "-".join(v.edge2)]
                entry["witness"] = _witness_json(v.witness)
            elif isinstance(v, VertexOnNonAdjacentEdge):
                entry["vertex"] = v.vertex
                entry["edge"] = "-".join(v.edge)
                entry["witness"] = _witness_json(v.witness)
            else:
                entry["vertices"] = [v.vertex1, v.vertex2]
            out.append(entry)
        return {"almost_embedding": not out, "violations": out}


def _witness_json(w):
    if isinstance(w, Point2):
        return {"point": [rat_str(w.x), rat_str(w.y)]}
    return {
        "segment": [
            [rat_str(w.a.x), rat_str(w.a.y)],
            [rat_str(w.b.x), rat_str(w.b.y)],
        ]
    }


def validate_almost_embedding(d: Drawing) -> ViolationReport:
    """Check disjointness of all non-adjacent simplex pairs, with witnesses."""
    report = ViolationReport()
    vs = list(d.graph.vertices)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if d.placement[u] == d.placement[v]:
                report.violations.append(CoincidentVertices(u, v))
    for v in vs:
        p = d.placement[v]
        for e in d.graph.edges_sorted():
            if v in e:
                continue
            if d.edge_lines[e].contains_point(p):
                report.violations.append(VertexOnNonAdjacentEdge(v, e, p))
    edges = d.graph.edges_sorted()
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1 :]:
            if edges_adjacent(e1, e2):
                continue
            witness = None
            for s1 in d.edge_lines[e1].segments():
                for s2 in d.edge_lines[e2].segments():
                    got = segment_intersection(s1, s2)
                    if got is not None:
                        witness = got
                        break
                if witness is not None:
                    break
            if witness is not None:
                report.violations.append(NonAdjacentEdgesIntersect(e1, e2, witness))
    return report


# ---------------------------------------------------------------- general position


@dataclass(frozen=True)
class GeneralPositionIssue:
    kind: str
    detail: str

    def to_dict(self):
        return {"kind": self.kind, "detail": self.detail}


def _pt_str(p: Point2) -> str:
    return f"({rat_str(p.x)}, {rat_str(p.y)})"


def validate_general_position(d: Drawing) -> List[GeneralPositionIssue]:
    """Only transverse interior double points are allowed as degeneracies."""
    issues: List[GeneralPositionIssue] = []
    vs = list(d.graph.vertices)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if d.placement[u] == d.placement[v]:
                issues.append(GeneralPositionIssue("coincident-vertices", f"{u} = {v}"))

    # A vertex image may touch an edge image only as that edge's own endpoint.
    for v in vs:
        p = d.placement[v]
        for e in d.graph.edges_sorted():
            line = d.edge_lines[e]
            segs = line.segments()
            for i, s in enumerate(segs):
                if not point_on_segment(p, s):
                    continue
                allowed = (v == e[0] and i == 0 and p == line.start) or (
                    v == e[1] and i == len(segs) - 1 and p == line.end
                )
                if not allowed:
                    issues.append(
                        GeneralPositionIssue(
                            "vertex-on-edge", f"vertex {v} on edge {'-'.join(e)} at {_pt_str(p)}"
                        )
                    )
                    break

    indexed = d.indexed_segments()
    crossings: Dict[Tuple, set] = {}
    for a in range(len(indexed)):
        e1, i1, s1 = indexed[a]
        bend_pts1 = set(d.edge_lines[e1].vertices)
        for b in range(a + 1, len(indexed)):
            e2, i2, s2 = indexed[b]
            if e1 == e2 and abs(i1 - i2) == 1:
                continue  # consecutive segments share their bend
            got = segment_intersection(s1, s2)
            if got is None:
                continue
            if isinstance(got, Segment):
                issues.append(
                    GeneralPositionIssue(
                        "overlap",
                        f"edges {'-'.join(e1)} and {'-'.join(e2)} overlap along a segment",
                    )
                )
                continue
            p = got
            shared = set(e1) & set(e2)
            if any(d.placement[w] == p for w in shared):
                continue  # legitimate common endpoint of adjacent edges
            if p in bend_pts1 or p in set(d.edge_lines[e2].vertices):
                issues.append(
                    GeneralPositionIssue(
                        "crossing-at-vertex",
                        f"intersection of {'-'.join(e1)} and {'-'.join(e2)} at polyline vertex {_pt_str(p)}",
                    )
                )
                continue
            crossings.setdefault((p.x, p.y), set()).update({(e1, i1), (e2, i2)})

    for (x, y), participants in crossings.items():
        if len(participants) >= 3:
            issues.append(
                GeneralPositionIssue(
                    "triple-point",
                    f"{len(participants)} segments through ({rat_str(x)}, {rat_str(y)})",
                )
            )
    unique = []
    for issue in issues:
        if issue not in unique:
            unique.append(issue)
    return unique


def is_general_position(d: Drawing) -> bool:
    return not validate_general_position(d)


def transverse_crossing_points(d: Drawing, e1: Tuple[str, str], e2: Tuple[str, str]):
    """Intersection points of two edge images (must be plain crossings)."""
    pts = set()
    for s1 in d.edge_lines[e1].segments():
        for s2 in d.edge_lines[e2].segments():
            got = segment_intersection(s1, s2)
            if got is None:
                continue
            if not isinstance(got, Point2):
                raise NotGeneralPositionError(
                    f"edges {'-'.join(e1)}, {'-'.join(e2)} overlap along a segment"
                )
            pts.add((got.x, got.y))
    return [Point2(x, y) for x, y in sorted(pts)]


# ---------------------------------------------------------------- parity operations


def crossing_parity(line: ClosedPolyline, path: Polyline) -> int:
    """|L ∩ P| mod 2 for a closed L and open P in general position."""
    if len(line.vertices) < 2 or len(path.vertices) < 2:
        raise GeometryError("degenerate input")
    for endpoint in (path.start, path.end):
        if line.contains_point(endpoint):
            raise NotGeneralPositionError("path endpoint lies on the closed line")
    line_vertices = set(line.vertices)
    path_vertices = set(path.vertices)
    points = set()
    for s1 in line.segments():
        for s2 in path.segments():
            got = segment_intersection(s1, s2)
            if got is None:
                continue
            if isinstance(got, Segment):
                raise NotGeneralPositionError("collinear overlap between the lines")
            if got in line_vertices or got in path_vertices:
                raise NotGeneralPositionError(f"intersection at a vertex {_pt_str(got)}")
            if (got.x, got.y) in points:
                raise NotGeneralPositionError(f"multiple crossings at {_pt_str(got)}")
            points.add((got.x, got.y))
    return len(points) % 2


def mod2_interior_contains(line: ClosedPolyline, x: Point2) -> bool:
    """Chessboard-coloring interior: a generic ray from x meets L oddly."""
    if line.contains_point(x):
        raise PointOnPolylineError(x, None)
    if len(line.vertices) == 1:
        return False
    segments = line.segments()
    d = _generic_ray_direction(x, line.vertices, [s.vec for s in segments])
    count = 0
    for seg in segments:
        sa = (d.cross(seg.a - x) > 0)
        sb = (d.cross(seg.b - x) > 0)
        if sa == sb:
            continue
        t = d.cross(seg.a - x) / d.cross(seg.a - seg.b)
        p = seg.a + t * seg.vec
        if d.dot(p - x) > 0:
            count += 1
    return count % 2 == 1


# ---------------------------------------------------------------- JSON


def point_to_json(p: Point2):
    return [rat_str(p.x), rat_str(p.y)]


def point_from_json(item) -> Point2:
    x, y = item
    return Point2(rat(x), rat(y))


def drawing_to_dict(d: Drawing) -> dict:
    if d.graph.kind:
        graph = {"kind": d.graph.kind}
    else:
        graph = {
            "vertices": list(d.graph.vertices),
            "edges": [[u, v] for u, v in d.graph.edges_sorted()],
        }
    return {
        "graph": graph,
        "placement": {v: point_to_json(p) for v, p in sorted(d.placement.items(), key=lambda kv: label_key(kv[0]))},
        "edges": {
            f"{e[0]}-{e[1]}": [point_to_json(p) for p in d.edge_lines[e].vertices]
            for e in d.graph.edges_sorted()
        },
    }


def drawing_from_dict(data: dict) -> Drawing:
    try:
        graph_spec = data["graph"]
        if "kind" in graph_spec:
            graph = builtin_graph(graph_spec["kind"])
        else:
            graph = Graph(graph_spec["vertices"], [tuple(e) for e in graph_spec["edges"]])
        placement = {v: point_from_json(p) for v, p in data["placement"].items()}
        edge_lines = {}
        for key, pts in data["edges"].items():
            u, v = key.split("-", 1)
            edge_lines[edge_key(u, v)] = Polyline([point_from_json(p) for p in pts])
    except (KeyError, TypeError, ValueError) as exc:
        raise GeometryError(f"bad drawing JSON: {exc}") from exc
    return Drawing(graph, placement, edge_lines)


def dumps_drawing(d: Drawing) -> str:
    return json.dumps(drawing_to_dict(d), sort_keys=True, indent=2) + "\n"


def loads_drawing(text: str) -> Drawing:
    return drawing_from_dict(json.loads(text))
