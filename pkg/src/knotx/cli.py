"""Command-line front end.

Exit codes: 0 on success (all checks passing), 1 when a verification run
found failures, 2 for usage, parse, or precondition problems.  Output is
byte-deterministic for identical inputs; ``--output structured`` emits one
JSON document with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from .bracket import DEFAULT_STATE_LIMIT, jones, kauffman_bracket, span_x, x_polynomial
from .diagram import Diagram, parse_pd, render_pd
from .errors import (
    PDSyntaxError,
    PDValidationError,
    PreconditionError,
    StateLimitError,
    TableConsistencyError,
    TableFormatError,
    UnknownKnotError,
)
from .harness import (
    VERDICT_ANOMALY,
    check_skein,
    check_t_skein,
    lemma_suite,
    theorem_sweep,
)
from .knotdb import bundled_table_path, identify, load_table
from .stategraph import reduce_graph, render_state_graph, state_graph

__all__ = ["main", "run"]

TABLE_ENV_VAR = "KNOTX_TABLE"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotx",
        description="Exact bracket/Jones engine and crossing-change verifier for link diagrams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_diagram_args(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--pd", help="inline PD text, e.g. 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'")
        src.add_argument("--file", help="path of a file containing PD text")
        add_common(p)

    def add_common(p):
        p.add_argument(
            "--max-crossings",
            type=int,
            default=DEFAULT_STATE_LIMIT,
            help=f"refuse state sums beyond this many crossings (default {DEFAULT_STATE_LIMIT})",
        )
        p.add_argument(
            "--output",
            choices=("text", "structured"),
            default="text",
            help="plain text or one JSON document",
        )

    def add_table_arg(p):
        p.add_argument(
            "--table",
            help=f"knot table TSV (default: ${TABLE_ENV_VAR} or the bundled table)",
        )

    for name, summary in (
        ("bracket", "Kauffman bracket polynomial"),
        ("xpoly", "writhe-normalized X polynomial"),
        ("jones", "Jones polynomial"),
        ("span", "span of the X polynomial"),
        ("writhe", "sum of crossing signs"),
        ("predicates", "alternating / split / reduced flags"),
    ):
        p = sub.add_parser(name, help=summary)
        add_diagram_args(p)

    p = sub.add_parser("change", help="apply a crossing change and print the PD")
    add_diagram_args(p)
    p.add_argument("--crossing", type=int, required=True, help="crossing id (0-based)")

    p = sub.add_parser("stategraph", help="dump the A- or B-state multigraph")
    add_diagram_args(p)
    p.add_argument("--kind", choices=("A", "B"), required=True)
    p.add_argument("--reduced", action="store_true", help="collapse parallel edges")

    p = sub.add_parser("skein-check", help="evaluate the skein identities at crossings")
    add_diagram_args(p)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--crossing", type=int, help="crossing id (0-based)")
    grp.add_argument("--all", action="store_true", help="every crossing")

    p = sub.add_parser("identify", help="match a diagram against the table by Jones")
    add_diagram_args(p)
    add_table_arg(p)

    p = sub.add_parser("lemma-suite", help="span/coefficient identities over table diagrams")
    add_common(p)
    add_table_arg(p)
    p.add_argument("--name", help="restrict to one record")

    p = sub.add_parser("verify-theorem", help="crossing-change sweep over table diagrams")
    add_common(p)
    add_table_arg(p)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--name", help="sweep one record")
    grp.add_argument(
        "--sweep-max-crossings",
        type=int,
        help="sweep all alternating records up to this crossing number",
    )

    return parser


def _load_diagram(args) -> Diagram:
    text = args.pd if args.pd is not None else open(args.file, encoding="utf-8").read()
    return parse_pd(text)


def _resolve_table(args):
    path = getattr(args, "table", None) or os.environ.get(TABLE_ENV_VAR) or bundled_table_path()
    return load_table(path)


def _emit(args, payload: dict, text: str) -> None:
    if args.output == "structured":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cmd = args.command

    if cmd in ("bracket", "xpoly", "jones", "span", "writhe", "predicates"):
        d = _load_diagram(args)
        limit = args.max_crossings
        if cmd == "bracket":
            value = kauffman_bracket(d, limit).render()
        elif cmd == "xpoly":
            value = x_polynomial(d, limit).render()
        elif cmd == "jones":
            value = jones(d, limit).render()
        elif cmd == "span":
            value = str(span_x(d, limit))
        elif cmd == "writhe":
            value = str(d.writhe())
        else:
            alternating = d.is_alternating()
            split = d.is_split()
            reduced = None if split else d.is_reduced()
            payload = {
                "command": cmd,
                "alternating": alternating,
                "split": split,
                "reduced": reduced,
            }
            text = "\n".join(
                (
                    f"alternating: {str(alternating).lower()}",
                    f"split: {str(split).lower()}",
                    f"reduced: {'n/a (split)' if reduced is None else str(reduced).lower()}",
                )
            )
            _emit(args, payload, text)
            return 0
        _emit(args, {"command": cmd, "result": value}, value)
        return 0

    if cmd == "change":
        d = _load_diagram(args)
        out = render_pd(d.crossing_change(args.crossing))
        _emit(args, {"command": cmd, "pd": out}, out)
        return 0

    if cmd == "stategraph":
        d = _load_diagram(args)
        g = state_graph(d, args.kind)
        if args.reduced:
            red = reduce_graph(g)
            lines = [f"v={red.vertex_count}"]
            lines += [f"e {u} {v}" for u, v in sorted(red.simple_edges)]
            text = "\n".join(lines)
            payload = {
                "command": cmd,
                "kind": args.kind,
                "reduced": True,
                "v": red.vertex_count,
                "edges": sorted(list(e) for e in red.simple_edges),
            }
        else:
            text = render_state_graph(g)
            payload = {
                "command": cmd,
                "kind": args.kind,
                "reduced": False,
                "v": g.vertex_count,
                "edges": sorted(list(e) for e in g.edges),
            }
        _emit(args, payload, text)
        return 0

    if cmd == "skein-check":
        d = _load_diagram(args)
        limit = args.max_crossings
        sites = range(len(d.crossings)) if args.all else [args.crossing]
        results = []
        failures = 0
        for ci in sites:
            a_form = check_skein(d, ci, limit)
            t_form = check_t_skein(d, ci, limit)
            ok = a_form.is_zero() and t_form.is_zero()
            failures += 0 if ok else 1
            results.append(
                {
                    "crossing": ci,
                    "a_form": a_form.render(),
                    "t_form": t_form.render(),
                    "ok": ok,
                }
            )
        text = "\n".join(
            f"crossing {r['crossing']}: a-form={r['a_form']} t-form={r['t_form']} "
            f"{'ok' if r['ok'] else 'FAIL'}"
            for r in results
        )
        _emit(args, {"command": cmd, "results": results, "failures": failures}, text)
        return 0 if failures == 0 else 1

    if cmd == "identify":
        d = _load_diagram(args)
        table = _resolve_table(args)
        result = identify(table, d)
        lines = [f"{name} ({chir})" for name, chir in result.matches] or ["no match"]
        text = "\n".join(lines + [f"exact: {str(result.exact).lower()}"])
        payload = {
            "command": cmd,
            "matches": [list(m) for m in result.matches],
            "exact": result.exact,
        }
        _emit(args, payload, text)
        return 0

    if cmd == "lemma-suite":
        table = _resolve_table(args)
        names = [args.name] if args.name else [r.name for r in table.records if r.alternating]
        rows = []
        failures = 0
        for name in names:
            rec = table.record(name)
            res = lemma_suite(rec.diagram(), name=name)
            rows.append(res)
            if not res.passed:
                failures += 1
        text = "\n".join(
            f"{r.name}: {'PASS' if r.passed else 'FAIL ' + ','.join(r.failures())}" for r in rows
        )
        payload = {
            "command": cmd,
            "results": [asdict(r) for r in rows],
            "failures": failures,
        }
        _emit(args, payload, text)
        return 0 if failures == 0 else 1

    if cmd == "verify-theorem":
        table = _resolve_table(args)
        if args.name:
            names = [args.name]
        else:
            cap = args.sweep_max_crossings
            names = [
                r.name
                for r in table.records
                if r.alternating and r.crossing_number >= 1
                and (cap is None or r.crossing_number <= cap)
            ]
        reports = []
        anomalies = 0
        for name in names:
            report = theorem_sweep(table, name, args.max_crossings)
            reports.append(report)
            anomalies += len(report.anomalies)
        lines = []
        for rep in reports:
            tallies = ", ".join(f"{k}={v}" for k, v in rep.counts().items())
            lines.append(f"{rep.source} (c={rep.c_source}): {tallies}")
            for o in rep.outcomes:
                target = o.identified or ("ambiguous:" + "/".join(n for n, _ in o.matches) if o.matches else "-")
                lines.append(
                    f"  crossing {o.crossing}: -> {target}"
                    f" chirality={o.chirality or '-'}"
                    f" c_target={'-' if o.c_target is None else o.c_target}"
                    f" span_drop={o.span_drop} verdict={o.verdict}"
                )
        payload = {
            "command": cmd,
            "reports": [
                {
                    "source": rep.source,
                    "c_source": rep.c_source,
                    "outcomes": [asdict(o) for o in rep.outcomes],
                }
                for rep in reports
            ],
            "anomalies": anomalies,
        }
        _emit(args, payload, "\n".join(lines))
        return 0 if anomalies == 0 else 1

    raise AssertionError(f"unhandled command {cmd}")  # pragma: no cover


def main(argv=None) -> int:
    try:
        return run(argv)
    except (PDSyntaxError, PDValidationError, TableFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (StateLimitError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnknownKnotError as exc:
        print(f"error: unknown knot {exc}", file=sys.stderr)
        return 2
    except TableConsistencyError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
