"""Command-line front door: validation, invariants, generation, property
checks, exploration, 3-space linking, and the HTTP service.

Exit codes: 0 success, 1 a checked property or validation failed, 2 usage.
Identical argv and seed give byte-identical output; WU_LAB_SEED overrides
the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .exact import GeometryError
from .drawing import (
    CycleSpec,
    drawing_to_dict,
    loads_drawing,
    validate_almost_embedding,
    validate_general_position,
)
from .invariants import (
    check_theorems,
    cyclic_wu,
    drawing_triangle_chain,
    drawing_triod,
    invariant_profile,
    label_key,
    triodic_wu,
)
from .constructions import GENERATOR_FAMILIES, ConstructionError, explore_profiles, generate
from .properties import CHECKS
from .space3 import cgs_report, six_config_from_json


def _default_seed() -> int:
    try:
        return int(os.environ.get("WU_LAB_SEED", "0"))
    except ValueError:
        return 0


def _emit(data: dict, as_json: bool, human) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        human(data)


def parse_cycle_token(token: str) -> CycleSpec:
    """'123' or '1,2,3' or "11'22'" into a cycle of labels."""
    if "," in token:
        labels = [t.strip() for t in token.split(",") if t.strip()]
    else:
        labels = re.findall(r"\d'?", token)
    if not labels:
        raise GeometryError(f"cannot parse cycle {token!r}")
    return CycleSpec(labels)


def cmd_validate(args) -> int:
    with open(args.drawing) as f:
        d = loads_drawing(f.read())
    report = validate_almost_embedding(d)
    gp = validate_general_position(d)
    data = report.to_dict()
    data["general_position"] = {"ok": not gp, "issues": [i.to_dict() for i in gp]}

    def human(data):
        print("almost embedding:", "yes" if data["almost_embedding"] else "NO")
        for v in data["violations"]:
            print("  -", v["text"])
        print("general position:", "yes" if data["general_position"]["ok"] else "NO")
        for i in data["general_position"]["issues"]:
            print("  -", i["kind"] + ":", i["detail"])

    _emit(data, args.json, human)
    return 0 if report.ok else 1


def cmd_invariants(args) -> int:
    with open(args.drawing) as f:
        d = loads_drawing(f.read())
    cycles = [parse_cycle_token(t) for t in args.cycles] if args.cycles else None
    profile = invariant_profile(d, cycles)
    theorem_report = check_theorems(d)
    data = {
        "profile": profile.to_dict(),
        "theorems": theorem_report.to_dict(),
    }
    wu = {}
    vs = sorted(d.graph.vertices, key=label_key)
    if theorem_report.shape == "k4":
        try:
            wu["cyclic_123"] = cyclic_wu(drawing_triangle_chain(d, *vs[:3]))
            wu["triodic_4"] = triodic_wu(drawing_triod(d, vs[3], vs[:3]))
        except GeometryError:
            pass
    if wu:
        data["wu"] = wu

    def human(data):
        for entry in data["profile"]["entries"]:
            print(f"w(cycle {''.join(entry['cycle'])}, vertex {entry['vertex']}) = {entry['w']}")
        for k, v in data.get("wu", {}).items():
            print(f"wu[{k}] = {v}")
        for st in data["theorems"]["statements"]:
            status = "pass" if st["pass"] else ("FAIL" if st["applicable"] else "n/a")
            print(f"{st['id']}: {status}  {st['values']}")

    _emit(data, args.json, human)
    return 0


def cmd_generate(args) -> int:
    family = args.family
    wanted = GENERATOR_FAMILIES.get(family)
    if wanted is None:
        print(f"unknown family {family}; choose from {sorted(GENERATOR_FAMILIES)}", file=sys.stderr)
        return 2
    params = {}
    for key in ("n", "n1", "n2", "n3", "n4"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    try:
        gen = generate(family, **params)
    except ConstructionError as exc:
        print(f"generation failed: {exc}", file=sys.stderr)
        return 1
    data = gen.to_dict()
    if args.out:
        payload = data["drawing"] if gen.drawing is not None and args.drawing_only else data
        with open(args.out, "w") as f:
            json.dump(payload, f, sort_keys=True, indent=2)
            f.write("\n")
        print(f"wrote {args.out}")
        return 0
    print(json.dumps(data, sort_keys=True, indent=2))
    return 0


def cmd_check(args) -> int:
    runner = CHECKS.get(args.property)
    if runner is None:
        print(f"unknown property {args.property}; choose from {sorted(CHECKS)}", file=sys.stderr)
        return 2
    result = runner(args.trials, args.seed)

    def human(data):
        status = "ok" if data["ok"] else "FAIL"
        print(f"{data['name']}: {data['passed']}/{data['trials']} {status}")
        for fail in data["failures"][:10]:
            print("  -", fail)

    _emit(result.to_dict(), args.json, human)
    return 0 if result.ok else 1


def cmd_explore(args) -> int:
    profiles, _ = explore_profiles(args.graph, args.budget, args.seed)
    data = {
        "graph": args.graph,
        "budget": args.budget,
        "seed": args.seed,
        "profile_count": len(profiles),
        "profiles": [p.to_dict() for p in profiles],
    }

    def human(data):
        print(f"{data['graph']}: {data['profile_count']} distinct profiles reached")
        for prof in data["profiles"]:
            entries = ", ".join(
                f"({''.join(e['cycle'])},{e['vertex']})={e['w']}" for e in prof["entries"] if e["w"] != 0
            )
            print("  -", entries or "all zero")

    _emit(data, args.json, human)
    return 0


def cmd_lk3(args) -> int:
    with open(args.config) as f:
        cfg = six_config_from_json(json.load(f))
    try:
        report = cgs_report(cfg)
    except GeometryError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1

    def human(data):
        for key, lk in sorted(data["linking_numbers"].items()):
            print(f"lk({key}) = {lk}")
        print("linked pair exists:", data["linked_pair_exists"])

    _emit(report, args.json, human)
    return 0 if report["linked_pair_exists"] else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wulab",
        description="Exact winding and Wu invariants of piecewise-linear graph drawings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="almost-embedding and general-position reports")
    p.add_argument("drawing")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", help="winding profile, Wu numbers, theorem checks")
    p.add_argument("drawing")
    p.add_argument("--cycles", nargs="*", help="cycles like 123 124")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("generate", help="drawings/triods with prescribed invariants")
    p.add_argument("family", help=f"one of {sorted(GENERATOR_FAMILIES)}")
    p.add_argument("--n", type=int)
    for k in ("n1", "n2", "n3", "n4"):
        p.add_argument(f"--{k}", type=int)
    p.add_argument("--out")
    p.add_argument("--drawing-only", action="store_true", help="write bare drawing JSON")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="randomized property runs")
    p.add_argument("property", help=f"one of {sorted(CHECKS)}")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("explore", help="profile exploration snapshots")
    p.add_argument("graph", choices=["cube", "octahedron", "k4", "k5m45"])
    p.add_argument("--budget", type=int, default=20)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("lk3", help="six-point linking report")
    p.add_argument("config")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lk3)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
