"""Command-line interface.

Subcommands: count, classify, inverse-column, images, verify, recover.
Output is JSON by default (stable key order, big integers as decimal
strings) or a terse plain form; both are byte-deterministic for fixed
inputs.  Exit codes: 0 success, 2 usage, 3 unreadable or malformed graph
input, 4 violated precondition or guardrail, 5 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .canonical import enumerate_graphs
from .counting import aut_count, hom_count, vesurj_count, vsurj_count
from .errors import (
    BudgetExceededError,
    GraphParseError,
    InternalCheckError,
    SingularSystemError,
)
from .families import (
    classification_json,
    classify_C,
    classify_F,
    hom_polytime,
    vesurj_polytime,
    vsurj_polytime,
)
from .graphs import Graph, load_graph, parse_graph, to_text
from .interpolation import homomorphic_images, lovasz_matrix, reduction_demo
from .inversion import dsub_downset, dsub_inverse_column, verify_expansions

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_INTERNAL = 5

DEFAULT_BUDGET = 10**9


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _one_line(g: Graph) -> str:
    return "; ".join(to_text(g).strip().splitlines())


def _read_graph(spec: str) -> Graph:
    if spec == "-":
        return parse_graph(sys.stdin.read())
    return load_graph(spec)


def _check_budget(kind: str, g: Graph | None, h: Graph, budget: int) -> None:
    nodes = math.factorial(h.n) if kind == "aut" else h.n**g.n
    if nodes > budget:
        raise BudgetExceededError(
            f"brute force would explore up to {nodes} assignments, "
            f"over the budget of {budget}"
        )


def _cmd_count(args) -> int:
    h = _read_graph(args.h)
    g = _read_graph(args.g) if args.g is not None else None
    if args.kind == "aut":
        _check_budget("aut", None, h, args.budget)
        count = aut_count(h)
        path = "bruteforce"
    else:
        path = "bruteforce"
        if not args.force_bruteforce:
            if args.kind in ("hom", "vsurj") and classify_F(h)[0]:
                path = "polytime"
            elif args.kind == "vesurj" and classify_C(h)[0]:
                path = "polytime"
        if path == "polytime":
            if args.kind == "hom":
                count = hom_polytime(g, h, classify_F(h)[1])
            elif args.kind == "vsurj":
                count = vsurj_polytime(g, h)
            else:
                count = vesurj_polytime(g, h)
        else:
            _check_budget(args.kind, g, h, args.budget)
            counter = {"hom": hom_count, "vsurj": vsurj_count, "vesurj": vesurj_count}
            count = counter[args.kind](g, h)
    if args.format == "json":
        _emit_json({"count": str(count), "kind": args.kind, "path": path})
    else:
        sys.stdout.write(f"{count}\n")
        sys.stderr.write(f"path: {path}\n")
    return EXIT_OK


def _cmd_classify(args) -> int:
    h = _read_graph(args.h)
    record = classification_json(h)
    if args.format == "json":
        _emit_json(record)
    else:
        sys.stdout.write(f"in_F {str(record['in_F']).lower()}\n")
        sys.stdout.write(f"in_C {str(record['in_C']).lower()}\n")
        sys.stdout.write("components " + " ".join(record["components"]) + "\n")
        hard = record["hard_edge"]
        sys.stdout.write("hard_edge " + (f"{hard[0]} {hard[1]}" if hard else "none") + "\n")
    return EXIT_OK


def _cmd_inverse_column(args) -> int:
    h = _read_graph(args.h)
    column = dsub_inverse_column(h)
    if args.format == "json":
        _emit_json(column.to_json_entries())
    else:
        for _, rep, coeff in column.items():
            sys.stdout.write(f"{coeff}\t{_one_line(rep)}\n")
    return EXIT_OK


def _cmd_images(args) -> int:
    h = _read_graph(args.h)
    members = homomorphic_images(h)
    if args.format == "json":
        _emit_json([{"graph": to_text(rep), "key": key.hex()} for key, rep in members])
    else:
        for key, rep in members:
            sys.stdout.write(f"{key.hex()}\t{_one_line(rep)}\n")
    return EXIT_OK


def _run_verify(n_max: int) -> dict:
    sections = {}
    sections["expansions"] = verify_expansions(n_max)
    classes = enumerate_graphs(n_max)

    diag = []
    for _, h in classes:
        a = aut_count(h)
        if vsurj_count(h, h) != a or vesurj_count(h, h) != a:
            diag.append({"h": to_text(h), "aut": str(a)})
    sections["diagonal"] = {"classes": len(classes), "violations": diag}

    fam = []
    for _, h in classes:
        in_f, _ = classify_F(h)
        in_c, _ = classify_C(h)
        if in_c and not in_f:
            fam.append({"h": to_text(h), "check": "C inside F"})
        if in_f:
            from itertools import combinations

            from .graphs import induced_subgraph

            for r in range(h.n + 1):
                for s in combinations(range(h.n), r):
                    if not classify_F(induced_subgraph(h, s))[0]:
                        fam.append({"h": to_text(h), "check": "F induced-closed"})
        if in_c:
            for _, rep, _ in dsub_downset(h):
                if not classify_C(rep)[0]:
                    fam.append({"h": to_text(h), "check": "C deletion-closed"})
        if in_f and not in_c:
            from .families import find_hard_edge

            try:
                find_hard_edge(h)
            except InternalCheckError:
                fam.append({"h": to_text(h), "check": "hard edge exists"})
    sections["families"] = {"classes": len(classes), "violations": fam}

    inter = []
    for _, h in classes:
        try:
            lovasz_matrix(homomorphic_images(h))
        except SingularSystemError:
            inter.append({"h": to_text(h), "check": "closed-set matrix invertible"})
    sections["interpolation"] = {"classes": len(classes), "violations": inter}

    total = sum(len(s["violations"]) for s in sections.values())
    return {"n_max": n_max, "sections": sections, "violations": total, "ok": total == 0}


def _cmd_verify(args) -> int:
    report = _run_verify(args.n_max)
    if args.format == "json":
        _emit_json(report)
    else:
        for name, sec in sorted(report["sections"].items()):
            checked = sec.get("checks", sec.get("classes"))
            sys.stdout.write(f"{name}: {checked} checks, {len(sec['violations'])} violations\n")
        sys.stdout.write("ok\n" if report["ok"] else "FAIL\n")
    return EXIT_OK if report["ok"] else EXIT_INTERNAL


def _cmd_recover(args) -> int:
    h = _read_graph(args.h)
    g = _read_graph(args.g)
    report = reduction_demo(h, args.mode, g)
    if args.format == "json":
        _emit_json(report)
    else:
        for t in report["targets"]:
            sys.stdout.write(
                f"target {t['key']} recovered {t['recovered']} "
                f"truth {t['ground_truth']} match {str(t['match']).lower()}\n"
            )
    return EXIT_OK if all(t["match"] for t in report["targets"]) else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homcount",
        description="Exact homomorphism, surjection, and compaction counting "
        "for small graphs with loops.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["json", "plain"], default="json")

    p = sub.add_parser("count", help="count maps between two graphs")
    p.add_argument("--kind", choices=["hom", "vsurj", "vesurj", "aut"], required=True)
    p.add_argument("--g", help="source graph file, or - for stdin")
    p.add_argument("--h", required=True, help="target graph file, or - for stdin")
    p.add_argument("--force-bruteforce", action="store_true",
                   help="skip the closed-form path even when the target allows it")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="assignment-node budget for brute force")
    add_format(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("classify", help="family membership and hard edge")
    p.add_argument("--h", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("inverse-column", help="inverse deletion-subgraph column at a graph")
    p.add_argument("--h", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_inverse_column)

    p = sub.add_parser("images", help="homomorphic images of a graph")
    p.add_argument("--h", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_images)

    p = sub.add_parser("verify", help="replay the counting identities up to a size")
    p.add_argument("--n-max", type=int, default=2)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("recover", help="recover hom counts from a surjective oracle")
    p.add_argument("--h", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--mode", choices=["vsurj", "vesurj"], required=True)
    add_format(p)
    p.set_defaults(func=_cmd_recover)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    if args.command == "count":
        if args.kind == "aut" and args.g is not None:
            parser.print_usage(sys.stderr)
            sys.stderr.write("homcount: error: --g is not accepted with --kind aut\n")
            return EXIT_USAGE
        if args.kind != "aut" and args.g is None:
            parser.print_usage(sys.stderr)
            sys.stderr.write(f"homcount: error: --kind {args.kind} requires --g\n")
            return EXIT_USAGE
    stdin_inputs = sum(
        1 for v in (getattr(args, "g", None), getattr(args, "h", None)) if v == "-"
    )
    if stdin_inputs > 1:
        parser.print_usage(sys.stderr)
        sys.stderr.write("homcount: error: at most one graph may come from stdin\n")
        return EXIT_USAGE

    try:
        return args.func(args)
    except (GraphParseError, OSError) as exc:
        sys.stderr.write(f"homcount: graph input error: {exc}\n")
        return EXIT_PARSE
    except (InternalCheckError, AssertionError) as exc:
        sys.stderr.write(f"homcount: internal check failed: {exc}\n")
        return EXIT_INTERNAL
    except ValueError as exc:
        sys.stderr.write(f"homcount: precondition violated: {exc}\n")
        return EXIT_PRECONDITION


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
