"""Floating-point winding oracles.

Inexact by design: plain atan2 accumulation.  Used only to cross-check the
exact implementations in tests; nothing in the library consumes these values.
"""

from __future__ import annotations

import math

from .exact import Point2
from .winding import ClosedPolyline, Polyline


def _angle(v: Point2) -> float:
    return math.atan2(float(v.y), float(v.x))


def _turn(a: float, b: float) -> float:
    t = b - a
    while t <= -math.pi:
        t += 2 * math.pi
    while t > math.pi:
        t -= 2 * math.pi
    return t


def partial_winding_float(path: Polyline, o: Point2) -> float:
    total = 0.0
    vs = path.vertices
    for a, b in zip(vs, vs[1:]):
        total += _turn(_angle(a - o), _angle(b - o))
    return total / (2 * math.pi)


def winding_float(line: ClosedPolyline, o: Point2) -> float:
    if len(line.vertices) == 1:
        return 0.0
    return partial_winding_float(line.to_open(), o)
