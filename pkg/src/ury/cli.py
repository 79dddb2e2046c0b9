"""Batch command-line surface over the library.

One subcommand per capability: ``build``, ``export``, ``verify``,
``extend``, ``balls``, ``tightspan``, ``hull-check``, ``c0-demo``,
``embed``, ``isom-extend``.  Every command is a thin adapter over the
library and is deterministic: identical inputs produce byte-identical
outputs.

Exit codes: 0 on success; 1 on a domain failure (axiom violation found,
inadmissible radii, infeasible family, nothing found) with a
machine-readable JSON reason on stderr; 2 on usage or parse errors.

Conventions: all numeric flag values are exact rationals (decimal notation
is rejected, never converted), and all point/ball indices in flags, files,
and printed output are 1-based; the library API underneath is 0-based.
The only environment dependence is ``URY_CACHE_DIR``, which overrides the
default prefix-cache directory ``.ury-cache``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import construct, embed, extension, linf, metric, tightspan
from .errors import InvalidMode, PairwiseInfeasible, ParseError, UryError
from .rational import format_rational, parse_rational

BUILTIN_HULLS = {
    "h1": [("0", "0"), ("1", "1")],
    "h2": [("0", "0"), ("1/2", "1/2"), ("1", "0")],
    "segment": [("0", "0"), ("0", "1")],
    "backtrack": [("0", "0"), ("2", "0"), ("0", "0")],
}
HULL_REFERENCE = (("0", "0"), ("0", "1"))


def _rational_flag(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    if not text.isdigit() or int(text) < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(text)


def _index_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str) -> list[Fraction]:
    try:
        return [parse_rational(t) for t in text.split(",") if t]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair_list(text: str) -> list[tuple[int, int]]:
    pairs = []
    if not text:
        return pairs
    for chunk in text.split(","):
        left, sep, right = chunk.partition(":")
        if not sep or not left.isdigit() or not right.isdigit():
            raise argparse.ArgumentTypeError(f"expected s:t pairs, got {chunk!r}")
        pairs.append((int(left), int(right)))
    return pairs


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def _fail(kind: str, detail: str, **extra) -> int:
    payload = {"error": kind, "detail": detail}
    payload.update(extra)
    print(json.dumps(payload), file=sys.stderr)
    return 1


def _violation_dict(v: metric.Violation) -> dict:
    return {
        "kind": v.kind,
        "indices": [i + 1 for i in v.indices],
        "lhs": format_rational(v.lhs),
        "rhs": format_rational(v.rhs),
    }


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cache_dir() -> str:
    return os.environ.get("URY_CACHE_DIR", ".ury-cache")


def cmd_build(args) -> int:
    override = None
    if args.q_override:
        data = json.loads(_read_text(args.q_override))
        override = tuple(tuple(parse_rational(str(v)) for v in entry) for entry in data)
    mode = construct.ConstructionMode(
        duplicate_handling=args.duplicates,
        case1_scope=args.case1_scope,
        q_override=override,
    )

    cache_path = os.path.join(_cache_dir(), f"{mode.tag}.ury")
    resume = None
    if os.path.exists(cache_path):
        try:
            cached = construct.load_prefix(cache_path)
            if cached.mode_tag == mode.tag:
                resume = cached
        except (ParseError, OSError):
            resume = None
    try:
        state = construct.build_prefix(args.points, mode, resume=resume)
    except InvalidMode:
        # Cache disagrees with the requested enumeration: rebuild from scratch.
        resume = None
        state = construct.build_prefix(args.points, mode)

    os.makedirs(_cache_dir(), exist_ok=True)
    if resume is None or resume.m < state.m:
        construct.save_prefix(state, cache_path)
    if args.out:
        construct.save_prefix(state, args.out)

    correct = sum(1 for rec in state.log if rec.correctly_defined)
    top = max((v for row in state.rho for v in row), default=Fraction(0))
    print(
        f"points={state.m} mode={state.mode_tag} "
        f"correctly_defined={correct}/{len(state.log)} max_distance={format_rational(top)}"
    )
    return 0


def cmd_export(args) -> int:
    state = construct.load_prefix(args.cache)
    if args.points is not None:
        if args.points > state.m:
            raise ValueError(f"cache holds {state.m} points, cannot export {args.points}")
        state = construct.truncate_prefix(state, args.points)
    text = metric.serialize_matrix(state.rho)
    _write_text(args.out, text)
    print(f"wrote {state.m}-point distance matrix to {args.out}")
    return 0


def cmd_verify(args) -> int:
    rows = metric.parse_matrix_text(_read_text(args.dmat))
    report = metric.validate_metric(rows)
    if report.ok:
        print(f"OK: metric on {len(rows)} points")
        return 0
    for v in report.violations:
        d = _violation_dict(v)
        print(f"violation {d['kind']} at {tuple(d['indices'])}: {d['lhs']} vs {d['rhs']}")
    return _fail(
        "MetricViolation",
        f"{len(report.violations)} axiom violation(s)",
        violations=[_violation_dict(v) for v in report.violations],
    )


def cmd_extend(args) -> int:
    space = metric.parse_distance_matrix(_read_text(args.dmat))
    support_1b = args.support if args.support else list(range(1, space.n + 1))
    support = [i - 1 for i in support_1b]
    req = extension.ExtensionRequest(space, support, args.radii)
    check = extension.admissible(req)
    if not check.ok:
        i, j = check.pair
        return _fail(
            "Inadmissible",
            f"radii at points {support_1b[i]} and {support_1b[j]} fail the {check.side} bound",
            points=[support_1b[i], support_1b[j]],
            side=check.side,
        )
    ext = extension.extend_one_point(req)
    new_row = [ext.distance(space.n, z) for z in range(space.n)]
    print(" ".join(format_rational(v) for v in new_row))
    if args.out:
        _write_text(args.out, metric.serialize_distance_matrix(ext))
    return 0


def cmd_balls(args) -> int:
    data = json.loads(_read_text(args.family))
    dmat = data["dmat"]
    text = dmat if "\n" in dmat else _read_text(dmat)
    space = metric.parse_distance_matrix(text)
    balls = [(int(b["center"]) - 1, parse_rational(str(b["radius"]))) for b in data["balls"]]
    family = extension.BallFamily(space, balls)
    try:
        result = extension.ball_intersection_witness(family)
    except PairwiseInfeasible as exc:
        return _fail(
            "PairwiseInfeasible",
            f"balls {exc.pair[0] + 1} and {exc.pair[1] + 1} cannot meet",
            balls=[exc.pair[0] + 1, exc.pair[1] + 1],
            center_distance=format_rational(exc.lhs),
            radius_sum=format_rational(exc.rhs),
        )
    payload = {
        "witness_index": result.witness + 1,
        "survivors": [i + 1 for i in result.trace.survivors],
        "removals": [
            {
                "removed": r.removed + 1,
                "dominating": r.dominating + 1,
                "lhs": format_rational(r.lhs),
                "rhs": format_rational(r.rhs),
            }
            for r in result.trace.removals
        ],
        "certificate": [
            {
                "ball": e.ball + 1,
                "center": e.center + 1,
                "radius": format_rational(e.radius),
                "distance": format_rational(e.distance),
                "on_sphere": e.on_sphere,
            }
            for e in result.certificate
        ],
        "extended_dmat": metric.serialize_distance_matrix(result.space),
    }
    out = json.dumps(payload, indent=2) + "\n"
    sys.stdout.write(out)
    if args.out:
        _write_text(args.out, out)
    return 0


def cmd_tightspan(args) -> int:
    space = metric.parse_distance_matrix(_read_text(args.dmat))
    if args.vertices:
        result = tightspan.tight_span_vertices(space)
        for f in result.vertices:
            print(" ".join(format_rational(v) for v in f.values))
        return 0
    if args.kuratowski is not None:
        f = tightspan.kuratowski(space, args.kuratowski - 1)
        print(" ".join(format_rational(v) for v in f.values))
        return 0
    values = [parse_rational(t) for t in args.project.split()]
    g = tightspan.KatetovFunction(space, values)
    f = tightspan.extremal_below(g)
    print(" ".join(format_rational(v) for v in f.values))
    return 0


def cmd_hull_check(args) -> int:
    if args.builtin:
        breakpoints = BUILTIN_HULLS[args.builtin]
        reference = HULL_REFERENCE
    else:
        data = json.loads(_read_text(args.candidate))
        breakpoints = [(str(x), str(y)) for x, y in data["breakpoints"]]
        reference = [(str(x), str(y)) for x, y in data["a"]]
    candidate = tightspan.PathHullCandidate(breakpoints, reference)
    report = tightspan.verify_hull_candidate(candidate, args.step)
    print(
        f"endpoints: distance {format_rational(report.endpoint_distance)} "
        f"vs reference {format_rational(report.reference_distance)} "
        f"-> {'ok' if report.endpoint_ok else 'FAIL'}"
    )
    if report.isometry_ok:
        print(f"isometry: exact at all {report.sample_count} samples")
    else:
        v = report.first_violation
        print(
            f"isometry: FAIL at parameters ({format_rational(v.param_a)}, "
            f"{format_rational(v.param_b)}): distance {format_rational(v.actual)} "
            f"!= {format_rational(v.expected)}"
        )
    if report.ok:
        print("PASS: isometric to a segment with matching endpoints")
        return 0
    print("FAIL")
    detail = "endpoint distance mismatch" if not report.endpoint_ok else "not isometric to a segment"
    return _fail("HullCheckFailed", detail)


def cmd_c0_demo(args) -> int:
    report = linf.c0_counterexample(args.n, args.radius)
    payload = {
        "n": report.N,
        "pairwise_distance": format_rational(report.pairwise_distance),
        "pairwise_feasible": report.pairwise_feasible,
        "conclusion": report.conclusion,
        "witness": [format_rational(v) for v in report.witness] if report.witness else None,
        "witness_tail_value": (
            format_rational(report.witness_tail_value)
            if report.witness_tail_value is not None
            else None
        ),
    }
    _emit_json(payload)
    if report.witness is None:
        return _fail("EmptyIntersection", "the ball family has no common point")
    return 0


def cmd_embed(args) -> int:
    state = construct.load_prefix(args.prefix)
    if args.limit is not None:
        if args.limit > state.m:
            raise ValueError(f"prefix holds {state.m} points, cannot search {args.limit}")
        state = construct.truncate_prefix(state, args.limit)
    target = metric.parse_distance_matrix(_read_text(args.target))
    result = embed.find_isometric_embedding(target, state)
    payload = {
        "status": result.status,
        "mapping": [i + 1 for i in result.mapping] if result.mapping else None,
        "searched": result.searched_prefix_length,
    }
    _emit_json(payload)
    if result.status != embed.FOUND:
        return _fail("NotFound", f"no embedding within the first {state.m} points")
    return 0


def cmd_isom_extend(args) -> int:
    state = construct.load_prefix(args.prefix)
    pairs = [(s - 1, t - 1) for s, t in args.pairs]
    partial = embed.PartialIsometry(state, pairs)
    extended = embed.extend_partial_isometry(partial, args.source - 1)
    if extended is None:
        _emit_json({"status": "not-found", "searched": state.m})
        return _fail("NotFound", f"no compatible image within the first {state.m} points")
    payload = {
        "status": "extended",
        "pairs": [[s + 1, t + 1] for s, t in extended.pairs],
        "new_pair": [extended.pairs[-1][0] + 1, extended.pairs[-1][1] + 1],
    }
    _emit_json(payload)
    return 0


# ---------------------------------------------------------------------------
# Parser wiring
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ury",
        description="Exact rational toolkit for Urysohn-style metric constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a prefix of the rational universal space")
    p.add_argument("--points", type=_positive_int, required=True)
    p.add_argument("--out", help="also write the cache file here")
    p.add_argument(
        "--duplicates",
        choices=[construct.SET_COLLAPSE, construct.LEGACY_MULTISET],
        default=construct.SET_COLLAPSE,
    )
    p.add_argument(
        "--case1-scope",
        choices=[construct.ALL_PRIOR, construct.LABELS_ONLY],
        default=construct.ALL_PRIOR,
    )
    p.add_argument("--q-override", help="JSON file: list of label sets (rational strings)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("export", help="convert a prefix cache to a .dmat matrix")
    p.add_argument("--cache", required=True)
    p.add_argument("--points", type=_positive_int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="validate the metric axioms of a .dmat file")
    p.add_argument("--dmat", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extend", help="adjoin a point at prescribed distances")
    p.add_argument("--dmat", required=True)
    p.add_argument("--radii", type=_rational_list, required=True)
    p.add_argument("--support", type=_index_list, help="1-based points (default: all)")
    p.add_argument("--out", help="write the extended matrix here")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("balls", help="witness a finite ball family intersection")
    p.add_argument("--family", required=True, help="JSON: {dmat, balls:[{center,radius}]}")
    p.add_argument("--out", help="write the certificate JSON here")
    p.set_defaults(func=cmd_balls)

    p = sub.add_parser("tightspan", help="tight-span computations on a .dmat space")
    p.add_argument("--dmat", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--vertices", action="store_true", help="enumerate all vertices")
    g.add_argument("--project", help="space-separated values to project to an extremal function")
    g.add_argument("--kuratowski", type=_positive_int, help="print f_a for a 1-based point")
    p.set_defaults(func=cmd_tightspan)

    p = sub.add_parser("hull-check", help="verify a max-norm polyline hull candidate")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--candidate", help="JSON: {breakpoints: [[x,y],...], a: [[x,y],[x,y]]}")
    g.add_argument("--builtin", choices=sorted(BUILTIN_HULLS))
    p.add_argument("--step", type=_rational_flag, default=Fraction(1, 64))
    p.set_defaults(func=cmd_hull_check)

    p = sub.add_parser("c0-demo", help="truncated null-sequence ball intersection demo")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--radius", type=_rational_flag, default=Fraction(1, 2))
    p.set_defaults(func=cmd_c0_demo)

    p = sub.add_parser("embed", help="search a prefix for an isometric copy of a target")
    p.add_argument("--target", required=True, help=".dmat file")
    p.add_argument("--prefix", required=True, help="prefix cache file")
    p.add_argument("--limit", type=_positive_int, help="search only the first L points")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("isom-extend", help="extend a partial isometry within a prefix")
    p.add_argument("--prefix", required=True, help="prefix cache file")
    p.add_argument("--pairs", type=_pair_list, default=[], help="existing s:t pairs, 1-based")
    p.add_argument("--source", type=_positive_int, required=True)
    p.set_defaults(func=cmd_isom_extend)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(json.dumps({"error": "ParseError", "detail": str(exc)}), file=sys.stderr)
        return 2
    except (json.JSONDecodeError, KeyError, ValueError, OSError) as exc:
        print(
            json.dumps({"error": type(exc).__name__, "detail": str(exc)}),
            file=sys.stderr,
        )
        return 2
    except UryError as exc:
        return _fail(type(exc).__name__, str(exc))


def entry_point() -> None:  # console script
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
