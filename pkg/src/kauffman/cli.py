"""Command-line interface.

Commands take a PD code either inline, as a path to a file holding one,
or as ``-`` for standard input.  Exit codes: 0 success, 1 a certified
invariant failed (the failing check is named on stderr), 2 malformed
input, 3 a resource cap was hit.  With ``--json`` all output is a
single canonical JSON document (sorted keys, fixed separators), so
identical inputs produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .adequacy import InvariantViolation, analyze, feasible_width
from .bracket import BRACKET_ENGINES, CapExceeded, bracket
from .corpus import CorpusEntry, bundled, load_corpus_file
from .diagram import (
    DiagramError,
    LinkDiagram,
    cable,
    mirror,
    parse_pd,
    serialize,
)
from .jones import reduced, unreduced

__all__ = ["main"]


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _poly_json(poly, var="A"):
    if poly is None:
        return None
    return {"pairs": poly.to_pairs(), "text": poly.to_text(var=var)}


def _load_pd(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _limits(engine: str, cap: int | None) -> dict:
    if cap is None:
        return {}
    if engine == "fast":
        return {"max_states": cap}
    return {"cap": cap}


def _cmd_bracket(args) -> int:
    diagram = parse_pd(_load_pd(args.pd))
    if args.selftest:
        values = {
            name: bracket(diagram, engine=name, **_limits(name, args.cap))
            for name in sorted(BRACKET_ENGINES)
        }
        agree = len(set(values.values())) == 1
        if args.json:
            print(_dumps({
                "agree": agree,
                "engines": {
                    k: _poly_json(v) for k, v in values.items()
                },
                "pd": serialize(diagram),
            }))
        else:
            for name, value in values.items():
                print(f"{name}: {value.to_text()}")
            print("engines agree" if agree else "ENGINES DISAGREE")
        if not agree:
            print(
                "invariant failure: engine-agreement: bracket engines "
                "disagree on this input",
                file=sys.stderr,
            )
            return 1
        return 0
    value = bracket(
        diagram, engine=args.engine, **_limits(args.engine, args.cap)
    )
    if args.json:
        print(_dumps({
            "bracket": _poly_json(value),
            "engine": args.engine,
            "pd": serialize(diagram),
        }))
    else:
        print(value.to_text())
    return 0


def _cmd_cjones(args) -> int:
    diagram = parse_pd(_load_pd(args.pd))
    limits = _limits(args.engine, args.cap)
    if args.unreduced:
        value = unreduced(diagram, args.n, engine=args.engine, **limits)
        if args.json:
            print(_dumps({
                "form": "unreduced",
                "pd": serialize(diagram),
                "value": _poly_json(value),
                "variable": "A",
                "width": args.n,
            }))
        else:
            print(value.to_text())
        return 0
    result = reduced(diagram, args.n, engine=args.engine, **limits)
    var = "q" if result.in_q else "A"
    shown = result.q_poly if result.in_q else result.a_poly
    if args.json:
        print(_dumps({
            "form": "reduced",
            "pd": serialize(diagram),
            "q_convertible": result.in_q,
            "value": _poly_json(shown, var=var),
            "variable": var,
            "width": args.n,
        }))
    else:
        print(result.to_text())
    return 0


def _render_report(j: dict) -> str:
    lines = [
        f"diagram: {j['name'] or '(unnamed)'} "
        f"({j['crossings']} crossings)",
        f"A-adequate: {j['a_adequate']}   B-adequate: {j['b_adequate']}",
        f"bracket exponent window: [{j['min_bound']}, {j['max_bound']}]",
        f"complexity (negatives, crossings, circles-writhe): "
        f"{tuple(j['complexity'])}",
    ]
    for n in sorted(j["ceilings"], key=int):
        actual = j["actual_degree"][n]
        ceiling = j["ceilings"][n]
        rel = "=" if actual == ceiling else "<"
        lines.append(
            f"width {n}: degree {actual} {rel} ceiling {ceiling}"
        )
    if j["cable_top"]:
        lines.append(f"cable top coefficients: {j['cable_top']}")
        lines.append(f"next-below coefficients: {j['cable_next']}")
    if j["t_poly"] is not None:
        lines.append(
            f"detector (width {j['t_width']}): {j['t_poly']['text']}"
        )
    if j["beta_series"]:
        lines.append(f"stable-tail prefix: {j['beta_series']}")
    lines.append(f"detector stability: {j['stability']}")
    for note in j["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _cmd_adequacy(args) -> int:
    diagram = parse_pd(_load_pd(args.pd))
    report = analyze(
        diagram,
        n_max=args.nmax,
        series=args.series,
        engine=args.engine,
        **_limits(args.engine, args.cap),
    )
    j = report.to_json()
    if args.json:
        print(_dumps(j))
    else:
        print(_render_report(j))
    return 0


def _cmd_cable(args) -> int:
    diagram = parse_pd(_load_pd(args.pd))
    cabled = cable(diagram, args.n)
    if args.json:
        print(_dumps({
            "cabled": serialize(cabled),
            "crossings": cabled.crossing_count,
            "pd": serialize(diagram),
            "width": args.n,
        }))
    else:
        print(serialize(cabled))
    return 0


def _verify_entry(payload) -> dict:
    """One corpus entry's whole check battery; runs in a worker."""
    name, pd, label_a, label_b, nmax, cap = payload
    checks: list[str] = []

    def done(check: str) -> None:
        checks.append(check)

    def fail(check: str, message: str) -> dict:
        return {
            "checks": checks,
            "failure": {"check": check, "message": message},
            "name": name,
            "ok": False,
        }

    try:
        diagram = parse_pd(pd)
    except DiagramError as err:
        return fail("parse", str(err))
    done("parse")

    try:
        values = {
            engine: bracket(
                diagram, engine=engine, **_limits(engine, cap)
            )
            for engine in sorted(BRACKET_ENGINES)
        }
        if len(set(values.values())) != 1:
            return fail(
                "engine-agreement",
                f"engines disagree: "
                f"{ {k: str(v) for k, v in values.items()} }",
            )
        done("engine-agreement")
        value = values["fast"]

        if not diagram.is_empty and diagram.crossing_count <= 3:
            two = cable(diagram, 2)
            cabled = {
                engine: bracket(
                    two, engine=engine, **_limits(engine, cap)
                )
                for engine in sorted(BRACKET_ENGINES)
            }
            if len(set(cabled.values())) != 1:
                return fail(
                    "engine-agreement",
                    "engines disagree on the width-2 cable",
                )
            done("engine-agreement-cable")

        flipped = bracket(mirror(diagram), **_limits("fast", cap))
        if flipped != value.invert_variable():
            return fail(
                "mirror-duality",
                "mirror bracket is not the variable-inverted bracket",
            )
        done("mirror-duality")

        width = feasible_width(diagram)
        if nmax is not None:
            width = min(width, nmax)
        report = analyze(
            diagram,
            n_max=width,
            name=name,
            **_limits("fast", cap),
        )
        done("adequacy-battery")

        if label_a is not None and report.a_adequate != label_a:
            return fail(
                "labels",
                f"stored A-flag {label_a}, computed {report.a_adequate}",
            )
        if label_b is not None and report.b_adequate != label_b:
            return fail(
                "labels",
                f"stored B-flag {label_b}, computed {report.b_adequate}",
            )
        done("labels")

        if report.t_poly is not None:
            if (len(report.t_poly) != 0) != report.a_adequate:
                return fail(
                    "t-dichotomy",
                    f"detector {report.t_poly.to_text(var='q')} "
                    f"inconsistent with A-adequate={report.a_adequate}",
                )
            done("t-dichotomy")

        if report.beta_series:
            first = report.beta_series[0]
            if (first != 0) != report.a_adequate:
                return fail(
                    "first-tail-coefficient",
                    f"leading tail coefficient {first} inconsistent "
                    f"with A-adequate={report.a_adequate}",
                )
            if report.a_adequate and abs(first) != 1:
                return fail(
                    "first-tail-coefficient",
                    f"A-adequate entries lead with +-1, got {first}",
                )
            done("first-tail-coefficient")
    except InvariantViolation as err:
        return fail(err.check, str(err))
    except CapExceeded as err:
        return fail("resource-cap", str(err))

    return {"checks": checks, "failure": None, "name": name, "ok": True}


def _cmd_verify(args) -> int:
    if args.corpus:
        entries = load_corpus_file(args.corpus)
    else:
        entries = list(bundled())
    payloads = [
        (e.name, e.pd, e.a_adequate, e.b_adequate, args.nmax, args.cap)
        for e in entries
    ]
    if args.workers and args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_verify_entry, payloads))
    else:
        results = [_verify_entry(p) for p in payloads]

    ok = all(r["ok"] for r in results)
    if args.json:
        print(_dumps({"entries": results, "ok": ok}))
    else:
        for r in results:
            if r["ok"]:
                print(f"ok   {r['name']} ({len(r['checks'])} checks)")
            else:
                f = r["failure"]
                print(f"FAIL {r['name']}: {f['check']}: {f['message']}")
        total = len(results)
        good = sum(1 for r in results if r["ok"])
        print(f"verified {total} entries: {good} ok, {total - good} failed")
    if not ok:
        first = next(r for r in results if not r["ok"])
        print(
            f"invariant failure: {first['failure']['check']} on "
            f"{first['name']}",
            file=sys.stderr,
        )
        return 1
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--engine",
        choices=sorted(BRACKET_ENGINES),
        default="fast",
        help="bracket engine (default: fast)",
    )
    sub.add_argument(
        "--cap",
        type=int,
        default=None,
        help="resource cap: crossing budget for the state-sum and "
        "subgraph engines, state budget for the fast engine",
    )
    sub.add_argument(
        "--workers",
        type=int,
        default=1,
        help="parallel workers (verify only)",
    )
    sub.add_argument(
        "--json",
        action="store_true",
        help="canonical JSON output",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kauffman",
        description="Exact bracket, cabled colored Jones, and "
        "semi-adequacy invariants of link diagrams.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser(
        "bracket", help="bracket polynomial of a PD code"
    )
    p.add_argument("pd", help="PD code, path to one, or - for stdin")
    p.add_argument(
        "--selftest",
        action="store_true",
        help="run every engine and require agreement",
    )
    _add_common(p)
    p.set_defaults(fn=_cmd_bracket)

    p = subs.add_parser(
        "cjones", help="colored Jones value at a cable width"
    )
    p.add_argument("pd", help="PD code, path to one, or - for stdin")
    p.add_argument("--n", type=int, required=True, help="cable width")
    p.add_argument(
        "--unreduced",
        action="store_true",
        help="writhe-corrected unreduced value instead of the quotient",
    )
    _add_common(p)
    p.set_defaults(fn=_cmd_cjones)

    p = subs.add_parser(
        "adequacy", help="full adequacy report for a diagram"
    )
    p.add_argument("pd", help="PD code, path to one, or - for stdin")
    p.add_argument(
        "--nmax", type=int, default=None, help="largest cable width"
    )
    p.add_argument(
        "--series",
        type=int,
        default=1,
        help="stable-tail coefficients to extract (default 1)",
    )
    _add_common(p)
    p.set_defaults(fn=_cmd_adequacy)

    p = subs.add_parser("cable", help="PD code of a parallel cable")
    p.add_argument("pd", help="PD code, path to one, or - for stdin")
    p.add_argument("--n", type=int, required=True, help="cable width")
    _add_common(p)
    p.set_defaults(fn=_cmd_cable)

    p = subs.add_parser(
        "verify",
        help="recompute every certified identity over a corpus",
    )
    p.add_argument(
        "--corpus",
        default=None,
        help="tab-separated corpus file (default: bundled entries)",
    )
    p.add_argument(
        "--nmax", type=int, default=None, help="cable width limit"
    )
    _add_common(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DiagramError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except InvariantViolation as err:
        print(f"invariant failure: {err}", file=sys.stderr)
        return 1
    except CapExceeded as err:
        print(f"resource cap exceeded: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
