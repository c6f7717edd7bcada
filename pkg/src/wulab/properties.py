"""Randomized property suites behind the `check` command and the acceptance tests.

Every runner samples valid instances deterministically from its seed, checks
the target statement on each, and reports counts plus the failures' details
(nothing is asserted here; callers decide what a failure means).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .approx import winding_float
from .exact import GeometryError, Point2, p3, rat
from .drawing import (
    CycleSpec,
    builtin_graph,
    crossing_parity,
    restriction_to_cycle,
    validate_almost_embedding,
)
from .winding import ClosedPolyline, PointOnPolylineError, Polyline, winding_number
from .invariants import (
    TriangleChain,
    Triod,
    cyclic_wu,
    cyclic_wu_float,
    k4_alternating_sum,
    k4_profile,
    radon_number,
    triodic_wu,
    triodic_wu_float,
    van_kampen_number,
    winding_of_vertex,
)
from .constructions import (
    FingerMoveSpec,
    MoveValidationError,
    RoutingError,
    SECOND,
    base_drawing,
    finger_move,
    generate,
    guide_loop_around_points,
    guide_loop_around_segment,
    legal_enclosures,
    random_general_position_map,
)
from .space3 import Cycle3, NotGenericError, SixConfig, cgs_report, cycles_disjoint, linking_number


@dataclass
class PropertyResult:
    name: str
    trials: int
    passed: int
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.trials and not self.failures

    def to_dict(self):
        return {
            "name": self.name,
            "trials": self.trials,
            "passed": self.passed,
            "ok": self.ok,
            "failures": self.failures,
        }


def _rnd_pt(rng, lo=-20, hi=20) -> Point2:
    return Point2(rat(rng.randint(lo, hi)), rat(rng.randint(lo, hi)))


def run_borsuk_ulam(trials: int, seed: int) -> PropertyResult:
    """Centrally symmetric closed polylines have odd winding about the center."""
    rng = random.Random(seed)
    res = PropertyResult("borsukulam", trials, 0)
    center = Point2(rat(0), rat(0))
    done = 0
    while done < trials:
        k = rng.randint(2, 20)
        half = [_rnd_pt(rng) for _ in range(k)]
        pts = half + [center - q for q in half]
        try:
            w = winding_number(ClosedPolyline(pts), center)
        except (GeometryError, PointOnPolylineError):
            continue
        done += 1
        if w % 2 == 1 and abs(w - winding_float(ClosedPolyline(pts), center)) < 1e-6:
            res.passed += 1
        else:
            res.failures.append(f"winding {w} for half={half}")
    return res


def run_stokes(trials: int, seed: int) -> PropertyResult:
    """|L ∩ P| mod 2 equals the winding difference of P's endpoints."""
    rng = random.Random(seed)
    res = PropertyResult("stokes", trials, 0)
    done = 0
    while done < trials:
        pts = [_rnd_pt(rng, -12, 12) for _ in range(rng.randint(3, 8))]
        qts = [_rnd_pt(rng, -15, 15) for _ in range(rng.randint(2, 6))]
        try:
            line = ClosedPolyline(pts)
            path = Polyline(qts)
            parity = crossing_parity(line, path)
            w0 = winding_number(line, path.start)
            w1 = winding_number(line, path.end)
        except (GeometryError, PointOnPolylineError):
            continue
        done += 1
        if parity == (w1 - w0) % 2:
            res.passed += 1
        else:
            res.failures.append(f"parity {parity} != dw {(w1 - w0) % 2}")
    return res


def run_identity_k4(trials: int, seed: int) -> PropertyResult:
    """The alternating sum of the four cycle windings vanishes for any map."""
    rng = random.Random(seed)
    res = PropertyResult("identity3.1", trials, 0)
    g = builtin_graph("k4")
    done = 0
    map_seed = seed
    d = None
    while done < trials:
        if done % 5 == 0 or d is None:
            d = random_general_position_map(g, map_seed, grid_size=60)
            map_seed += 1
        o = _rnd_pt(rng, -10, 70)
        try:
            total = k4_alternating_sum(d, o)
        except (GeometryError, PointOnPolylineError):
            continue
        done += 1
        if total == 0:
            res.passed += 1
        else:
            res.failures.append(f"sum {total} at {o} (seed {map_seed - 1})")
    return res


def run_radon(trials: int, seed: int) -> PropertyResult:
    res = PropertyResult("radon", trials, 0)
    g = builtin_graph("k4")
    for i in range(trials):
        d = random_general_position_map(g, seed + i)
        if radon_number(d) == 1:
            res.passed += 1
        else:
            res.failures.append(f"even radon number at seed {seed + i}")
    return res


def run_van_kampen(trials: int, seed: int) -> PropertyResult:
    res = PropertyResult("vankampen", trials, 0)
    g = builtin_graph("k5")
    for i in range(trials):
        d = random_general_position_map(g, seed + i)
        if van_kampen_number(d) == 1:
            res.passed += 1
        else:
            res.failures.append(f"even van Kampen number at seed {seed + i}")
    return res


def _valid_quadruples(lo: int, hi: int):
    for n1 in range(lo, hi + 1):
        for n2 in range(lo, hi + 1):
            for n3 in range(lo, hi + 1):
                for alt in (1, -1):
                    n4 = alt + n1 - n2 + n3
                    if lo <= n4 <= hi:
                        yield (n1, n2, n3, n4)


def run_thm52_sweep(lo: int = -2, hi: int = 2) -> PropertyResult:
    """Every realizable prescribed profile is hit exactly and has odd sum."""
    tuples = sorted(set(_valid_quadruples(lo, hi)))
    res = PropertyResult("thm5.2", len(tuples), 0)
    for tup in tuples:
        try:
            gen = generate("ae_k4_windings", n1=tup[0], n2=tup[1], n3=tup[2], n4=tup[3])
            d = gen.drawing
            profile = k4_profile(d)
            ok = (
                profile == tup
                and sum(profile) % 2 == 1
                and validate_almost_embedding(d).ok
            )
        except GeometryError as exc:
            ok = False
            res.failures.append(f"{tup}: {exc}")
            continue
        if ok:
            res.passed += 1
        else:
            res.failures.append(f"{tup}: profile {profile}")
    return res


def run_thm52_random(trials: int, seed: int) -> PropertyResult:
    rng = random.Random(seed)
    res = PropertyResult("thm5.2", trials, 0)
    for _ in range(trials):
        n1, n2, n3 = (rng.randint(-2, 2) for _ in range(3))
        n4 = rng.choice([1, -1]) + n1 - n2 + n3
        try:
            d = generate("ae_k4_windings", n1=n1, n2=n2, n3=n3, n4=n4).drawing
            profile = k4_profile(d)
            ok = profile == (n1, n2, n3, n4) and sum(profile) % 2 == 1
        except GeometryError as exc:
            res.failures.append(f"{(n1, n2, n3, n4)}: {exc}")
            continue
        if ok:
            res.passed += 1
        else:
            res.failures.append(f"{(n1, n2, n3, n4)}: got {profile}")
    return res


def _random_preserve_move(d, rng):
    moves = legal_enclosures(d.graph)
    if not moves:
        return None
    for _ in range(6):
        e, group = rng.choice(moves)
        try:
            if len(group) == 1:
                from .constructions import guide_loop_around_vertex

                spec = guide_loop_around_vertex(d, e, group[0], budget=400)
            else:
                spec = guide_loop_around_points(d, e, list(group), budget=400)
            if rng.random() < 0.5:
                spec = FingerMoveSpec(spec.edge, spec.anchor, spec.guide_loop, SECOND)
            moved = finger_move(d, spec, mode="preserve")
        except (RoutingError, MoveValidationError, GeometryError):
            continue
        if validate_almost_embedding(moved).ok:
            return moved
    return None


def run_thm55_sweep(n_lo: int = -5, n_hi: int = 5, perturbations: int = 100, seed: int = 0) -> PropertyResult:
    """Generated drawings plus random almost-embedding-preserving moves all
    keep the two distinguished windings at distance exactly one."""
    rng = random.Random(seed)
    cycle = CycleSpec(["1", "2", "3"])
    corpus = []
    res = PropertyResult("thm5.5", 0, 0)
    for n in range(n_lo, n_hi + 1):
        try:
            corpus.append(generate("ae_k5m45_w123_5", n=n).drawing)
        except GeometryError as exc:
            res.failures.append(f"n={n}: {exc}")
    checked = []
    checked.extend(corpus)
    made = 0
    while made < perturbations and corpus:
        d = rng.choice(corpus)
        moved = _random_preserve_move(d, rng)
        if moved is None:
            continue
        corpus.append(moved)
        checked.append(moved)
        made += 1
    res.trials = len(checked)
    for d in checked:
        w4 = winding_of_vertex(d, cycle, "4")
        w5 = winding_of_vertex(d, cycle, "5")
        if abs(w4 - w5) == 1 and validate_almost_embedding(d).ok:
            res.passed += 1
        else:
            res.failures.append(f"w4={w4} w5={w5}")
    return res


def run_counterexample_56a() -> PropertyResult:
    """The straight-chord pentagon map: difference zero, flagged not a.e."""
    from .invariants import check_theorems

    res = PropertyResult("map-counterexample", 1, 0)
    d = base_drawing("pentagon_k5_minus_45")
    rep = check_theorems(d)
    entry = rep.entry("thm5.5a")
    if (not rep.almost_embedding) and entry.values["difference"] == 0 and not entry.applicable:
        res.passed = 1
    else:
        res.failures.append(f"ae={rep.almost_embedding} diff={entry.values}")
    return res


def run_stmt57a(trials: int, seed: int) -> PropertyResult:
    """Parity of the distinguished winding difference on a moved corpus."""
    from .invariants import check_theorems

    rng = random.Random(seed)
    res = PropertyResult("stmt5.7a", trials, 0)
    d = base_drawing("k33_planar")
    done = 0
    while done < trials:
        rep = check_theorems(d)
        entry = rep.entry("stmt5.7a")
        done += 1
        if entry.applicable and entry.passed:
            res.passed += 1
        else:
            res.failures.append(f"values {entry.values}")
        moved = _random_preserve_move(d, rng)
        if moved is not None:
            d = moved
    return res


def run_rel64a(trials: int, seed: int) -> PropertyResult:
    rng = random.Random(seed)
    from .invariants import check_theorems

    res = PropertyResult("rel6.4a", trials, 0)
    for _ in range(trials):
        n1, n2, n3 = (rng.randint(-2, 2) for _ in range(3))
        n4 = rng.choice([1, -1]) + n1 - n2 + n3
        try:
            d = generate("ae_k4_windings", n1=n1, n2=n2, n3=n3, n4=n4).drawing
            entry = check_theorems(d).entry("rel6.4a")
            ok = entry.applicable and entry.passed
        except GeometryError as exc:
            res.failures.append(f"{(n1, n2, n3, n4)}: {exc}")
            continue
        if ok:
            res.passed += 1
        else:
            res.failures.append(f"{(n1, n2, n3, n4)}: {entry.values if entry else '?'}")
    return res


def run_rel65a(trials: int, seed: int) -> PropertyResult:
    rng = random.Random(seed)
    from .invariants import check_theorems

    res = PropertyResult("rel6.5a", trials, 0)
    for _ in range(trials):
        n = rng.randint(-5, 5)
        try:
            d = generate("ae_k5m45_w123_5", n=n).drawing
            entry = check_theorems(d).entry("rel6.5a")
            ok = entry.applicable and entry.passed
        except GeometryError as exc:
            res.failures.append(f"n={n}: {exc}")
            continue
        if ok:
            res.passed += 1
        else:
            res.failures.append(f"n={n}: {entry.values}")
    return res


def _random_triod(rng) -> Triod:
    center = _rnd_pt(rng, -4, 4)
    corners = []
    while len(corners) < 3:
        q = _rnd_pt(rng, -12, 12)
        if q != center and q not in corners:
            corners.append(q)
    legs = []
    for c in corners:
        mids = [_rnd_pt(rng, -14, 14) for _ in range(rng.randint(0, 3))]
        legs.append(Polyline([center] + mids + [c]))
    return Triod(center, legs)


def _random_chain(rng) -> TriangleChain:
    corners = []
    while len(corners) < 3:
        q = _rnd_pt(rng, -10, 10)
        if q not in corners:
            corners.append(q)
    a1, a2, a3 = corners
    lines = []
    for src, dst in ((a1, a2), (a2, a3), (a3, a1)):
        mids = [_rnd_pt(rng, -13, 13) for _ in range(rng.randint(0, 3))]
        lines.append(Polyline([src] + mids + [dst]))
    return TriangleChain(lines)


def run_wu_odd(trials: int, seed: int) -> PropertyResult:
    """Both Wu numbers are odd and agree with the float oracle."""
    rng = random.Random(seed)
    res = PropertyResult("wu-odd", trials, 0)
    done = 0
    while done < trials:
        use_triod = done % 2 == 0
        try:
            if use_triod:
                t = _random_triod(rng)
                wu, flt = triodic_wu(t), triodic_wu_float(t)
            else:
                c = _random_chain(rng)
                wu, flt = cyclic_wu(c), cyclic_wu_float(c)
        except GeometryError:
            continue
        done += 1
        if wu % 2 == 1 and abs(wu - flt) < 1e-6:
            res.passed += 1
        else:
            res.failures.append(f"wu {wu} float {flt}")
    return res


def run_cgs(trials: int, seed: int) -> PropertyResult:
    """Generic six-point configurations always contain a linked triangle pair."""
    rng = random.Random(seed)
    res = PropertyResult("cgs", trials, 0)
    done = 0
    while done < trials:
        cfg = SixConfig(
            {
                str(i + 1): p3(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
                for i in range(6)
            }
        )
        try:
            rep = cgs_report(cfg)
        except NotGenericError:
            continue
        done += 1
        if rep["linked_pair_exists"]:
            res.passed += 1
        else:
            res.failures.append(f"no linked pair: {rep['linking_numbers']}")
    return res


def run_lk_invariance(trials: int, seed: int) -> PropertyResult:
    """Linking number agrees across three independent generic projections."""
    rng = random.Random(seed)
    res = PropertyResult("lk-invariance", trials, 0)

    def rnd_cycle():
        pts = []
        while len(pts) < 3:
            q = p3(rng.randint(-8, 8), rng.randint(-8, 8), rng.randint(-8, 8))
            if not pts or q != pts[-1]:
                pts.append(q)
        return Cycle3(pts)

    done = 0
    while done < trials:
        c1, c2 = rnd_cycle(), rnd_cycle()
        if not cycles_disjoint(c1, c2):
            continue
        try:
            values = {linking_number(c1, c2, projection_skip=k) for k in range(3)}
            sym = linking_number(c2, c1)
        except NotGenericError:
            continue
        done += 1
        if len(values) == 1 and sym in values:
            res.passed += 1
        else:
            res.failures.append(f"values {values} sym {sym}")
    return res


CHECKS: Dict[str, Callable[[int, int], PropertyResult]] = {
    "borsukulam": run_borsuk_ulam,
    "stokes": run_stokes,
    "identity3.1": run_identity_k4,
    "radon": run_radon,
    "vankampen": run_van_kampen,
    "thm5.2": run_thm52_random,
    "thm5.5a": lambda trials, seed: run_thm55_sweep(perturbations=trials, seed=seed),
    "thm5.5b": lambda trials, seed: run_thm55_sweep(perturbations=trials, seed=seed),
    "stmt5.7a": run_stmt57a,
    "rel6.4a": run_rel64a,
    "rel6.5a": run_rel65a,
    "wu": run_wu_odd,
    "cgs": run_cgs,
    "lk": run_lk_invariance,
}
