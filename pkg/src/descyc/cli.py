"""Command-line entry points.

Exit codes: 0 success, 1 a computed result contradicts a structural claim,
2 usage or parse error, 3 resource limit (unsupported degree, memory guard).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from datetime import datetime, timezone

import descyc
from descyc.perm import descent_set, length, parse_perm
from descyc.problems import (
    DcMove,
    DcPath,
    IllegalMoveError,
    InvalidProblemError,
    SchubertProblem,
    apply_move,
    bruhat_vanishing_check,
    dc_path,
    is_dc_trivial,
    legal_moves,
    stabilize,
)
from descyc.schubert import MemoryBudgetError, structure_constant, symmetric_number
from descyc.perm import w0_complement

EXIT_OK = 0
EXIT_CLAIM = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _problem(args) -> SchubertProblem:
    return SchubertProblem(parse_perm(args.u), parse_perm(args.v), parse_perm(args.w))


def _emit(obj, as_json: bool, text: str | None = None) -> None:
    if as_json or text is None:
        json.dump(obj, sys.stdout, indent=2, ensure_ascii=False)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_analyze(args) -> int:
    p = _problem(args)
    trivial, witness = (None, None)
    moves: list[DcMove] = []
    if p.is_vertex:
        trivial, witness = is_dc_trivial(p)
        moves = legal_moves(p)
    obj = {
        "problem": p.to_obj(),
        "n": p.n,
        "lengths": [length(a) for a in p.args],
        "descents": [sorted(descent_set(a)) for a in p.args],
        "length_sum": p.length_sum,
        "vertex": p.is_vertex,
        "dc_trivial": trivial,
        "witness_column": witness,
        "legal_moves": [m.to_obj() for m in moves],
        "bruhat_possible": bruhat_vanishing_check(p) if p.is_vertex else None,
    }
    lines = [
        f"problem {p}  (n={p.n})",
        f"lengths {obj['lengths']}  sum {p.length_sum}"
        + ("" if p.is_vertex else f"  [not a vertex: needs {p.n*(p.n-1)//2}]"),
        f"descents {obj['descents']}",
    ]
    if p.is_vertex:
        lines.append(
            f"dc-trivial: {'yes, column ' + str(witness) if trivial else 'no'}"
        )
        lines.append(
            "legal moves: "
            + (", ".join(f"col {m.col}: {m.src}->{m.tgt}" for m in moves) or "none")
        )
        if not obj["bruhat_possible"]:
            lines.append("value 0 forced by Bruhat comparison")
    _emit(obj, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_number(args) -> int:
    p = _problem(args)
    if args.double:
        table = structure_constant(p.u, p.v, w0_complement(p.w), double=True)
        _emit({"problem": p.to_obj(), "value_table": table.to_obj()}, True)
        return EXIT_OK
    value = symmetric_number(p.u, p.v, p.w)
    if not p.is_vertex:
        print(
            f"note: lengths sum to {p.length_sum}, not {p.n*(p.n-1)//2}; "
            "the number vanishes by grading",
            file=sys.stderr,
        )
    _emit({"problem": p.to_obj(), "value": value}, args.json, str(value))
    return EXIT_OK


def cmd_path(args) -> int:
    p = _problem(args)
    path = dc_path(p, args.goal)
    if path is None:
        _emit({"found": False, "goal": args.goal}, args.json,
              f"no path to {args.goal} from {p}")
        return EXIT_OK
    end = path.end
    obj = {"found": True, "goal": args.goal, "path": path.to_obj(), "end": end.to_obj()}
    _emit(obj, args.json,
          f"{len(path.moves)} moves to {end}: "
          + ", ".join(f"col {m.col}:{m.src}->{m.tgt}" for m in path.moves))
    return EXIT_OK


def cmd_move(args) -> int:
    p = _problem(args)
    move = DcMove(args.col, getattr(args, "from"), args.to)
    q = apply_move(p, move)
    _emit({"problem": q.to_obj()}, args.json, str(q))
    return EXIT_OK


def cmd_stabilize(args) -> int:
    p = _problem(args)
    q = stabilize(p)
    _emit({"problem": q.to_obj()}, args.json, str(q))
    return EXIT_OK


def cmd_monk(args) -> int:
    from descyc.monk import MonkInstance, monk_dc_proof, monk_value

    inst = MonkInstance(parse_perm(args.pi), args.i, parse_perm(args.sigma))
    val = monk_value(inst)
    obj = {
        "value": val.value,
        "cover": val.cover,
        "straddle": val.straddle,
        "positions": list(val.positions) if val.positions else None,
    }
    if val.cover:
        proof = monk_dc_proof(inst)
        obj["proof"] = {
            "kind": proof.kind,
            "witness_column": proof.witness_column,
            "path": proof.path.to_obj(),
            "end": proof.end.to_obj(),
        }
    _emit(obj, True)
    return EXIT_OK


def cmd_witness(args) -> int:
    from descyc.witness import witness_run

    p = _problem(args)
    prime = None if args.field == "rational" else int(args.field)
    rec = witness_run(p, seed=args.seed, prime=prime)
    _emit({"problem": p.to_obj(), **rec.to_obj()}, True)
    return EXIT_OK


def cmd_graph(args) -> int:
    from descyc.graph import (
        build_components,
        classify_component_values,
        grassmannian_census,
        poincare_vertex_count,
        save_labels,
        save_report,
    )

    started = datetime.now(timezone.utc).isoformat()
    t0 = time.time()
    report = build_components(args.n)
    if report.vertex_count != poincare_vertex_count(args.n):
        print("enumeration disagrees with the coefficient count", file=sys.stderr)
        return EXIT_CLAIM
    if args.values:
        report = classify_component_values(report, trivial_samples=3)
    census = grassmannian_census(report)
    obj = report.to_json_obj()
    obj["census"] = {
        "grassmannian_problem_components_excl_easy": census.problem_components_excl_easy,
        "grassmannian_permutation_components_excl_easy": census.permutation_components_excl_easy,
        "easy_has_grassmannian_problem": census.easy_has_problem,
        "easy_has_grassmannian_permutation": census.easy_has_permutation,
    }
    artifacts = []
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(obj, fh, indent=2)
            fh.write("\n")
        artifacts.append(args.out)
    if args.labels:
        save_labels(report, args.labels)
        artifacts.append(args.labels)
    if args.out:
        manifest = {
            "command": "graph",
            "arguments": {"n": args.n, "values": args.values,
                          "threads": args.threads},
            "seed": None,
            "started": started,
            "finished": datetime.now(timezone.utc).isoformat(),
            "elapsed_s": round(time.time() - t0, 3),
            "artifacts": artifacts,
            "version": descyc.__version__,
        }
        mpath = args.out + ".manifest.json"
        with open(mpath, "w") as fh:
            json.dump(manifest, fh, indent=2)
            fh.write("\n")
    agg = obj["aggregates"]
    print(
        f"n={args.n}: {obj['vertices']} vertices, {obj['dc_trivial']} dc-trivial, "
        f"{agg['component_count']} components, "
        f"{agg['dc_trivial_free_components']} dc-trivial-free "
        f"({agg['dc_trivial_free_vertices']} vertices, easy {agg['easy_component_size']}, "
        f"{agg['dc_trivial_free_singletons']} singletons)"
    )
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from descyc.service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def _add_triple(sub, *, json_flag=True):
    sub.add_argument("u")
    sub.add_argument("v")
    sub.add_argument("w")
    if json_flag:
        sub.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dc",
        description="Descent-cycling workbench for Schubert problems on GL_n flags",
    )
    ap.add_argument("--version", action="version", version=descyc.__version__)
    sp = ap.add_subparsers(dest="command", required=True)

    s = sp.add_parser("analyze", help="lengths, descents, triviality, legal moves")
    _add_triple(s)
    s.set_defaults(fn=cmd_analyze)

    s = sp.add_parser("number", help="triple-intersection Schubert number")
    _add_triple(s)
    s.add_argument("--double", action="store_true",
                   help="equivariant coefficient table instead of the integer")
    s.set_defaults(fn=cmd_number)

    s = sp.add_parser("path", help="move certificate to a goal problem")
    _add_triple(s)
    s.add_argument("--goal", choices=("easy", "trivial"), default="easy")
    s.set_defaults(fn=cmd_path)

    s = sp.add_parser("move", help="apply one descent-cycling move")
    _add_triple(s)
    s.add_argument("--col", type=int, required=True)
    s.add_argument("--from", type=int, required=True, dest="from")
    s.add_argument("--to", type=int, required=True)
    s.set_defaults(fn=cmd_move)

    s = sp.add_parser("stabilize", help="embed a degree-n vertex into degree n+1")
    _add_triple(s)
    s.set_defaults(fn=cmd_stabilize)

    s = sp.add_parser("monk", help="evaluate a simple-reflection instance with proof")
    s.add_argument("pi")
    s.add_argument("i", type=int)
    s.add_argument("sigma")
    s.set_defaults(fn=cmd_monk)

    s = sp.add_parser("witness", help="reconstruct the intersection flag")
    _add_triple(s, json_flag=False)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--field", default=str(1_048_583),
                   help="a prime, or 'rational'")
    s.set_defaults(fn=cmd_witness)

    s = sp.add_parser("graph", help="enumerate and classify the problem graph")
    s.add_argument("n", type=int)
    s.add_argument("--out", help="write the JSON report here")
    s.add_argument("--labels", help="write binary component labels here")
    s.add_argument("--values", action="store_true",
                   help="annotate dc-trivial-free components with oracle values")
    s.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; output is identical")
    s.set_defaults(fn=cmd_graph)

    s = sp.add_parser("serve", help="run the JSON service for the explorer UI")
    s.add_argument("--port", type=int, default=8642)
    s.add_argument("--host", default="127.0.0.1")
    s.set_defaults(fn=cmd_serve)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    from descyc.graph import UnsupportedDegreeError

    try:
        return args.fn(args)
    except (UnsupportedDegreeError, MemoryBudgetError) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, InvalidProblemError, IllegalMoveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"claim mismatch: {exc}", file=sys.stderr)
        return EXIT_CLAIM


if __name__ == "__main__":
    sys.exit(main())
