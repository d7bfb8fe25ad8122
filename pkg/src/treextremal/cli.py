"""Command-line front end.

Subcommands: count, extremal, enumerate, verify. Output is a JSON document
(CSV for enumerate tables on request) in which every subtree/Wiener count is
a decimal string, since the values outgrow JSON numbers fast. Exit codes are
a stable contract: 0 success or verified pass, 1 verification failure,
2 invalid input, 3 budget exceeded.
"""

import argparse
import csv
import io
import json
import os
import sys

from .caterpillars import caterpillar_build, caterpillar_from_tree
from .canonical import canonical_form
from .counting import count_all_containing, count_subtrees, wiener_index
from .degrees import parse_degree_sequence
from .enumeration import DEFAULT_BUDGET, EnumerationBudget, enumerate_caterpillars, enumerate_trees
from .errors import BudgetExceeded, ParseError, TooLarge, TreextremalError
from .extremal import find_max_subtrees, find_min_subtrees
from .trees import diameter, is_caterpillar, tree_from_edge_list
from .verify import CLAIM_IDS, FAIL, run_claim

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

BUDGET_ENV = "TREEXTREMAL_BUDGET"


def _document(command: str, inputs: dict, results) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


def _emit(args, document: dict, csv_rows: list[dict] | None = None) -> None:
    if getattr(args, "format", "json") == "csv" and csv_rows is not None:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(csv_rows[0].keys()) if csv_rows else [])
        writer.writeheader()
        writer.writerows(csv_rows)
        text = buf.getvalue()
    else:
        text = json.dumps(document, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _budget(args) -> EnumerationBudget:
    cap = getattr(args, "budget_labeled", None)
    if cap is None:
        env = os.environ.get(BUDGET_ENV)
        if env is not None:
            try:
                cap = int(env)
            except ValueError:
                raise TreextremalError(f"{BUDGET_ENV} must be an integer, got {env!r}")
    if cap is None:
        return DEFAULT_BUDGET
    return EnumerationBudget(max_labeled=cap, max_n=DEFAULT_BUDGET.max_n)


def _parse_y_vector(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(tok.strip()) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"malformed pendant vector {text!r}") from None
    if not values or any(v < 0 for v in values):
        raise ParseError(f"pendant vector needs nonnegative entries: {text!r}")
    return values


def _optimizer_payload(report) -> list[dict]:
    rows = []
    for opt in report.optimizers:
        rows.append(
            {
                "canonical_code": opt.canonical_code,
                "y_vector": list(opt.y_vector) if opt.y_vector is not None else None,
                "edges": None if opt.y_vector is not None else [list(e) for e in opt.tree.edges],
                "phi": str(report.optimum),
            }
        )
    return rows


def cmd_count(args) -> int:
    if args.caterpillar:
        t = caterpillar_build(_parse_y_vector(args.caterpillar))
        source = {"caterpillar": args.caterpillar}
    else:
        with open(args.tree_file) as fh:
            t = tree_from_edge_list(fh.read())
        source = {"tree_file": args.tree_file}
    per_vertex = count_all_containing(t)
    results = {
        "n": t.n,
        "phi": str(count_subtrees(t)),
        "per_vertex": [str(v) for v in per_vertex],
        "diameter": diameter(t),
        "is_caterpillar": is_caterpillar(t),
        "wiener": str(wiener_index(t)),
    }
    _emit(args, _document("count", source, results))
    return EXIT_OK


def cmd_extremal(args) -> int:
    ds = parse_degree_sequence(args.degseq)
    budget = _budget(args)
    finder = find_min_subtrees if args.objective == "min" else find_max_subtrees
    report = finder(ds, method=args.method, budget=budget)
    results = {
        "degree_sequence": list(ds.degrees),
        "objective": report.objective,
        "optimum": str(report.optimum),
        "method": report.method,
        "trees_examined": report.trees_examined,
        "optimizers": _optimizer_payload(report),
    }
    inputs = {"degseq": args.degseq, "objective": args.objective, "method": args.method}
    _emit(args, _document("extremal", inputs, results))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    ds = parse_degree_sequence(args.degseq)
    budget = _budget(args)
    rows = []
    if args.caterpillars_only:
        for cat in enumerate_caterpillars(ds):
            t = cat.build()
            rows.append(
                {
                    "canonical_code": canonical_form(t),
                    "y_vector": list(cat.y),
                    "phi": str(count_subtrees(t)),
                    "wiener": str(wiener_index(t)),
                }
            )
    else:
        for t in enumerate_trees(ds, budget):
            cat = caterpillar_from_tree(t)
            rows.append(
                {
                    "canonical_code": canonical_form(t),
                    "y_vector": list(cat.y) if cat is not None else None,
                    "phi": str(count_subtrees(t)),
                    "wiener": str(wiener_index(t)),
                }
            )
    inputs = {"degseq": args.degseq, "caterpillars_only": args.caterpillars_only}
    csv_rows = [
        {
            "canonical_code": r["canonical_code"],
            "y_vector_or_blank": " ".join(str(v) for v in r["y_vector"]) if r["y_vector"] else "",
            "phi": r["phi"],
            "wiener": r["wiener"],
        }
        for r in rows
    ]
    _emit(args, _document("enumerate", inputs, {"count": len(rows), "trees": rows}), csv_rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_claim(args.claim, args.max_n, args.max_k, _budget(args))
    inputs = {"claim": args.claim, "max_n": args.max_n, "max_k": args.max_k}
    _emit(args, _document("verify", inputs, report.to_payload()))
    return EXIT_VERIFY_FAIL if report.status == FAIL else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treextremal",
        description="Count subtrees, enumerate realizations of a degree "
        "sequence, search for extremal trees, and verify the structural "
        "claims behind the search.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--out", metavar="FILE", default=None, help="write output to FILE")

    p = sub.add_parser("count", help="subtree counts for one tree")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("tree_file", nargs="?", help="edge-list file (first line n, then 'u v' lines)")
    group.add_argument("--caterpillar", metavar="Y", help="pendant vector, e.g. '1,0'")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("extremal", help="minimize or maximize the subtree count")
    p.add_argument("--degseq", required=True, help="degree sequence, e.g. '8,3,3,3,2,1*11'")
    p.add_argument("--objective", choices=("min", "max"), default="min")
    p.add_argument("--method", choices=("auto", "brute", "caterpillar", "closed-form"), default="auto")
    p.add_argument("--budget-labeled", type=int, default=None, help="labeled-count cap")
    common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("enumerate", help="all realizations of a degree sequence")
    p.add_argument("--degseq", required=True)
    p.add_argument("--caterpillars-only", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--budget-labeled", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run one structural claim check")
    p.add_argument("claim", choices=CLAIM_IDS)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--budget-labeled", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad input already; normalize anything else.
        return EXIT_INPUT if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except (BudgetExceeded, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (TreextremalError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
