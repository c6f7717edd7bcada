"""HTTP facade over the core for the web editor.

Computation endpoints are stateless adapters around the library calls; the
only state is an in-memory session store of named drawings with undo/redo
stacks.  Geometric precondition failures surface as 422 with the exact
witness text; schema problems as 400.
"""

from __future__ import annotations

import threading
import uuid
from typing import Dict, List, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .exact import GeometryError, rat
from .drawing import (
    CycleSpec,
    Drawing,
    drawing_from_dict,
    drawing_to_dict,
    validate_almost_embedding,
    validate_general_position,
)
from .invariants import check_theorems, invariant_profile
from .constructions import (
    ConstructionError,
    FIRST,
    SECOND,
    FingerMoveSpec,
    GENERATOR_FAMILIES,
    MoveValidationError,
    RoutingError,
    finger_move,
    generate,
    guide_loop_around_segment,
    guide_loop_around_vertex,
)
from .winding import ClosedPolyline
from .drawing import point_from_json

app = FastAPI(title="wulab", version="0.1.0")
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


def _load_drawing(data: dict) -> Drawing:
    try:
        return drawing_from_dict(data)
    except GeometryError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


class DrawingBody(BaseModel):
    drawing: dict


class InvariantsBody(BaseModel):
    drawing: dict
    cycles: Optional[List[List[str]]] = None


class FingerMoveBody(BaseModel):
    drawing: dict
    edge: List[str]
    move_type: str = FIRST
    # either an explicit spec ...
    anchor: Optional[List] = None  # [segment_index, "t"]
    guide_loop: Optional[List[List[str]]] = None
    # ... or an auto-routed target
    target_vertex: Optional[str] = None
    target_edge: Optional[List[str]] = None
    mode: str = "preserve"


@app.post("/api/validate")
def api_validate(body: DrawingBody):
    d = _load_drawing(body.drawing)
    report = validate_almost_embedding(d)
    issues = validate_general_position(d)
    data = report.to_dict()
    data["general_position"] = {"ok": not issues, "issues": [i.to_dict() for i in issues]}
    return data


@app.post("/api/invariants")
def api_invariants(body: InvariantsBody):
    d = _load_drawing(body.drawing)
    try:
        cycles = [CycleSpec(c) for c in body.cycles] if body.cycles else None
        profile = invariant_profile(d, cycles)
        report = check_theorems(d)
    except GeometryError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return {"profile": profile.to_dict(), "theorems": report.to_dict()}


@app.post("/api/finger-move")
def api_finger_move(body: FingerMoveBody):
    d = _load_drawing(body.drawing)
    if len(body.edge) != 2:
        raise HTTPException(status_code=400, detail="edge must be a label pair")
    edge = (body.edge[0], body.edge[1])
    if body.move_type not in (FIRST, SECOND):
        raise HTTPException(status_code=400, detail="move_type must be first or second")
    try:
        if body.guide_loop is not None and body.anchor is not None:
            loop = ClosedPolyline([point_from_json(p) for p in body.guide_loop])
            spec = FingerMoveSpec(edge, (int(body.anchor[0]), rat(body.anchor[1])), loop, body.move_type)
        elif body.target_vertex is not None:
            spec = guide_loop_around_vertex(d, edge, body.target_vertex, mode=body.mode)
            spec = FingerMoveSpec(spec.edge, spec.anchor, spec.guide_loop, body.move_type)
        elif body.target_edge is not None:
            spec = guide_loop_around_segment(d, edge, tuple(body.target_edge), mode=body.mode)
            spec = FingerMoveSpec(spec.edge, spec.anchor, spec.guide_loop, body.move_type)
        else:
            raise HTTPException(status_code=400, detail="need a spec or a target")
        moved = finger_move(d, spec, mode=body.mode)
    except (RoutingError, MoveValidationError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except GeometryError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return {"drawing": drawing_to_dict(moved)}


@app.get("/api/examples/{family}")
def api_example(family: str, n: Optional[int] = None, n1: Optional[int] = None,
                n2: Optional[int] = None, n3: Optional[int] = None, n4: Optional[int] = None):
    if family not in GENERATOR_FAMILIES:
        raise HTTPException(status_code=404, detail=f"unknown family {family}")
    params = {k: v for k, v in (("n", n), ("n1", n1), ("n2", n2), ("n3", n3), ("n4", n4)) if v is not None}
    try:
        gen = generate(family, **params)
    except ConstructionError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return gen.to_dict()


@app.get("/api/base/{name}")
def api_base(name: str):
    from .constructions import base_drawing

    try:
        d = base_drawing(name)
    except GeometryError as exc:
        raise HTTPException(status_code=404, detail=str(exc))
    return {"drawing": drawing_to_dict(d)}


@app.get("/api/figures/{name}")
def api_figure(name: str):
    from . import figures

    if name not in figures.FIGURE_NAMES:
        raise HTTPException(status_code=404, detail=f"unknown figure {name}")
    obj = getattr(figures, name)()
    if isinstance(obj, Drawing):
        return {"drawing": drawing_to_dict(obj)}
    from .constructions import Generated

    gen = Generated(name, {})
    if hasattr(obj, "legs"):
        gen.triod = obj
    else:
        gen.chain = obj
    return gen.to_dict()


# ---------------------------------------------------------------- sessions


class _Session:
    def __init__(self):
        self.lock = threading.Lock()
        self.stacks: Dict[str, List[dict]] = {}
        self.redo: Dict[str, List[dict]] = {}


_sessions: Dict[str, _Session] = {}
_sessions_lock = threading.Lock()


class PutDrawingBody(BaseModel):
    drawing: dict


def _session(sid: str) -> _Session:
    with _sessions_lock:
        s = _sessions.get(sid)
    if s is None:
        raise HTTPException(status_code=404, detail="unknown session")
    return s


@app.post("/api/session")
def api_new_session():
    sid = uuid.uuid4().hex
    with _sessions_lock:
        _sessions[sid] = _Session()
    return {"id": sid}


@app.put("/api/session/{sid}/drawing/{name}")
def api_put_drawing(sid: str, name: str, body: PutDrawingBody):
    _load_drawing(body.drawing)  # schema check
    s = _session(sid)
    with s.lock:
        s.stacks.setdefault(name, []).append(body.drawing)
        s.redo[name] = []
        depth = len(s.stacks[name])
    return {"name": name, "depth": depth}


@app.get("/api/session/{sid}/drawing/{name}")
def api_get_drawing(sid: str, name: str):
    s = _session(sid)
    with s.lock:
        stack = s.stacks.get(name)
        if not stack:
            raise HTTPException(status_code=404, detail="no such drawing")
        return {"name": name, "drawing": stack[-1], "depth": len(stack)}


@app.post("/api/session/{sid}/undo")
def api_undo(sid: str, name: str):
    s = _session(sid)
    with s.lock:
        stack = s.stacks.get(name)
        if not stack or len(stack) < 2:
            raise HTTPException(status_code=422, detail="nothing to undo")
        s.redo.setdefault(name, []).append(stack.pop())
        return {"name": name, "drawing": stack[-1], "depth": len(stack)}


@app.post("/api/session/{sid}/redo")
def api_redo(sid: str, name: str):
    s = _session(sid)
    with s.lock:
        redo = s.redo.get(name)
        if not redo:
            raise HTTPException(status_code=422, detail="nothing to redo")
        s.stacks[name].append(redo.pop())
        return {"name": name, "drawing": s.stacks[name][-1], "depth": len(s.stacks[name])}
