"""Exact invariants of piecewise-linear graph drawings in the plane.

Rational-arithmetic winding numbers and partial windings, almost-embedding
validation, Radon / van Kampen parities, triodic and cyclic Wu numbers,
finger-move constructions, and 3-space linking numbers.
"""

from .exact import GeometryError, Point2, Point3, Rational, Segment, orient, p2, p3, rat
from .winding import (
    ClosedPolyline,
    ExactTurn,
    Polyline,
    oriented_angle_sign,
    partial_winding,
    reverse,
    winding_from_parts,
    winding_number,
)
from .drawing import (
    CycleSpec,
    Drawing,
    Graph,
    builtin_graph,
    crossing_parity,
    drawing_from_dict,
    drawing_to_dict,
    mod2_interior_contains,
    restriction_to_cycle,
    straight_line_drawing,
    validate_almost_embedding,
    validate_general_position,
)
from .invariants import (
    InvariantProfile,
    TriangleChain,
    Triod,
    check_theorems,
    cyclic_wu,
    invariant_profile,
    k4_alternating_sum,
    radon_number,
    triodic_wu,
    van_kampen_number,
    winding_of_vertex,
)
from .constructions import (
    FingerMoveSpec,
    base_drawing,
    explore_profiles,
    finger_move,
    generate,
    guide_loop_around_segment,
    guide_loop_around_vertex,
    random_general_position_map,
)
from .space3 import Cycle3, SixConfig, cgs_report, linking_number

__version__ = "0.1.0"
