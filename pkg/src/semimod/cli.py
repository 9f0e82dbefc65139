"""Command-line interface: parse a problem file, run its query, emit JSON.

Exit codes: 0 for member/pass, 1 for non-member/counterexample, 2 for any
error.  The report schema is versioned ("schema": 1) and documented in
docs/schema.json.  Dispatch is single-threaded; one query runs per typed
invocation, and ``run`` executes a file's queries in order (batch mode).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .closure import _radical_member, semiprime_member
from .errors import ProblemSyntaxError, SemimodError
from .fields import PrimeField, field_from_flag
from .groebner import (
    GroebnerLimits,
    SubmodulePresentation,
    ideal_member,
    submodule_member,
)
from .matrixideals import matrix_semiprime_member
from .oracle import DEFAULT_CAP, oracle_check, oracle_check_escalating
from .parser import Query, parse_problem
from .poly import OrderSpec
from .verdicts import EXTENSION_STABLE, SOUND_ONLY
from .submodules import (
    prime_closure_at,
    semiprime_refutation,
    weakly_semiprime_refutation,
)

SCHEMA_VERSION = 1


def _order_json(order: OrderSpec):
    return {"scalar": order.scalar, "module": order.module}


def _base_report(kind: str, order: OrderSpec):
    return {
        "schema": SCHEMA_VERSION,
        "command": kind,
        "order": _order_json(order),
    }


def _certificate_json(cofactors):
    if cofactors is None:
        return None
    return {"cofactors": [str(c) for c in cofactors]}


def _vectors(problem, names):
    return [problem.get(name, {"vec"}) for name in names]


def run_query(problem, query: Query, options) -> tuple[dict, int]:
    """Execute one query; returns the JSON-ready report and the exit code."""
    order = options.order
    limits = options.limits
    report = _base_report(query.kind, order)
    started = time.perf_counter()
    code = 0

    if query.kind == "member":
        qkind, value = problem.objects[query.args["query"]]
        gens = [problem.objects[g][1] for g in query.args["generators"]]
        if qkind == "poly":
            verdict = ideal_member(value, gens, order, limits)
        else:
            submodule = SubmodulePresentation(problem.ring, len(value), gens)
            verdict = submodule_member(value, submodule, order, limits)
        report["member"] = verdict.member
        report["certificate"] = _certificate_json(verdict.certificate)
        report["counters"] = verdict.stats
        code = 0 if verdict.member else 1

    elif query.kind == "semiprime-member":
        value = problem.objects[query.args["query"]][1]
        gens = _vectors(problem, query.args["generators"])
        submodule = SubmodulePresentation(problem.ring, len(value), gens)
        verdict = semiprime_member(
            value, submodule, order, limits, witness_radius=options.witness_grid
        )
        report["member"] = verdict.member
        report["guarantee"] = verdict.guarantee
        report["method"] = verdict.method
        report["certificate"] = _certificate_json(verdict.certificate)
        report["witness"] = verdict.witness.as_json() if verdict.witness else None
        report["counters"] = verdict.stats
        code = 0 if verdict.member else 1

    elif query.kind == "radical-member":
        value = problem.objects[query.args["query"]][1]
        gens = [problem.get(g, {"poly"}) for g in query.args["generators"]]
        member, stats = _radical_member(value, gens, order, limits)
        report["member"] = member
        report["guarantee"] = (
            EXTENSION_STABLE if problem.ring.field.char == 0 else SOUND_ONLY
        )
        report["counters"] = stats
        code = 0 if member else 1

    elif query.kind == "matrix-semiprime-member":
        value = problem.objects[query.args["query"]][1]
        gens = [problem.get(g, {"mat"}) for g in query.args["generators"]]
        verdict = matrix_semiprime_member(
            value, gens, order, limits, witness_radius=options.witness_grid
        )
        report["member"] = verdict.member
        report["guarantee"] = verdict.guarantee
        report["witness"] = verdict.witness.as_json() if verdict.witness else None
        report["counters"] = verdict.stats
        code = 0 if verdict.member else 1

    elif query.kind == "refute-semiprime":
        value = problem.objects[query.args["query"]][1]
        gens = _vectors(problem, query.args["generators"])
        submodule = SubmodulePresentation(problem.ring, len(value), gens)
        witness = semiprime_refutation(submodule, value)
        report["witness_found"] = witness is not None
        report["witness"] = {"candidate": str(witness.candidate)} if witness else None
        code = 1 if witness else 0

    elif query.kind == "refute-weak":
        scalar = problem.objects[query.args["scalar"]][1]
        vector = problem.objects[query.args["vector"]][1]
        gens = _vectors(problem, query.args["generators"])
        submodule = SubmodulePresentation(problem.ring, len(vector), gens)
        witness = weakly_semiprime_refutation(submodule, scalar, vector)
        report["witness_found"] = witness is not None
        report["witness"] = (
            {"scalar": str(witness.scalar), "vector": str(witness.vector)}
            if witness
            else None
        )
        code = 1 if witness else 0

    elif query.kind == "k-of":
        gens = _vectors(problem, query.args["generators"])
        rank = len(gens[0])
        submodule = SubmodulePresentation(problem.ring, rank, gens)
        closure = prime_closure_at(submodule, query.args["point"])
        field = problem.ring.field
        report["point"] = [str(c) for c in query.args["point"]]
        report["improper"] = closure.improper
        report["span"] = [[field.format(x) for x in row] for row in closure.span]
        report["generators"] = [str(g) for g in closure.submodule.generators]
        code = 0

    elif query.kind == "oracle":
        value = problem.objects[query.args["query"]][1]
        kind = problem.objects[query.args["query"]][0]
        gens = [problem.get(g, {kind}) for g in query.args["generators"]]
        if options.field is not None:
            reports = [oracle_check(value, gens, options.field, options.cap)]
        else:
            base = problem.ring.field if problem.ring.field.size else PrimeField(3)
            reports = oracle_check_escalating(value, gens, base, options.cap)
        passed = all(r.passed for r in reports)
        report["pass"] = passed
        report["reports"] = [r.as_json() for r in reports]
        report["counters"] = {
            "points": sum(r.points for r in reports),
            "evaluations": sum(r.evaluations for r in reports),
        }
        code = 0 if passed else 1

    else:  # pragma: no cover - the parser rejects unknown kinds
        raise SemimodError(f"unsupported query kind {query.kind!r}")

    if options.cross_check and query.kind in (
        "semiprime-member",
        "matrix-semiprime-member",
    ):
        value = problem.objects[query.args["query"]][1]
        kind = problem.objects[query.args["query"]][0]
        gens = [problem.get(g, {kind}) for g in query.args["generators"]]
        oracle_field = options.field or PrimeField(3)
        report["oracle"] = oracle_check(value, gens, oracle_field, options.cap).as_json()

    report["timing_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    return report, code


def _error_report(exc: Exception) -> dict:
    error = {"type": getattr(exc, "code", "Error"), "message": str(exc)}
    if isinstance(exc, ProblemSyntaxError):
        error["line"] = exc.line
        error["column"] = exc.column
    return {"schema": SCHEMA_VERSION, "error": error}


class _Options:
    def __init__(self, args):
        self.order = OrderSpec(module=args.order)
        self.limits = GroebnerLimits(
            max_pairs=args.max_pairs, max_degree=args.max_degree
        )
        self.witness_grid = args.witness_grid
        self.field = field_from_flag(args.field) if args.field else None
        self.cap = args.cap
        self.cross_check = args.oracle


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semimod",
        description=(
            "Exact membership decisions for submodules of R^n, semiprime "
            "closures, and left ideals of matrix rings over polynomial rings."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = [
        ("member", "submodule or ideal membership with a cofactor certificate"),
        ("semiprime-member", "membership in the smallest semiprime submodule"),
        ("radical-member", "radical ideal membership via one tag variable"),
        ("matrix-semiprime-member", "membership in the smallest semiprime left ideal"),
        ("refute-semiprime", "check a candidate refutation of the closure rule"),
        ("refute-weak", "check a candidate refutation of the classical rule"),
        ("k-of", "smallest point-prime submodule containing the generators"),
        ("oracle", "finite-field point enumeration of the vanishing implication"),
        ("run", "run every query in the file (batch mode)"),
    ]
    for name, help_text in commands:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="problem file (see docs/format.md)")
        p.add_argument(
            "--order",
            choices=["top", "pot"],
            default="top",
            help="module order extension over grevlex (default: top)",
        )
        p.add_argument("--max-pairs", type=int, default=10_000)
        p.add_argument("--max-degree", type=int, default=40)
        p.add_argument(
            "--witness-grid",
            type=int,
            default=2,
            metavar="R",
            help="search witnesses with coordinates in {-R..R} over Q",
        )
        p.add_argument(
            "--field",
            default=None,
            metavar="P[^2]",
            help="finite field for the oracle, e.g. 3 or 3^2",
        )
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.add_argument(
            "--oracle",
            action="store_true",
            help="attach an advisory oracle cross-check to closure verdicts",
        )
    return parser


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
        problem = parse_problem(text)
        options = _Options(args)
        if args.command == "run":
            queries = problem.queries
            if not queries:
                raise SemimodError("problem file declares no query")
        else:
            if len(problem.queries) != 1:
                raise SemimodError(
                    "typed subcommands need exactly one query in the file"
                )
            queries = problem.queries
            if queries[0].kind != args.command:
                raise SemimodError(
                    f"file declares a {queries[0].kind!r} query, "
                    f"but the {args.command!r} subcommand was invoked"
                )
        reports = []
        code = 0
        for query in queries:
            report, query_code = run_query(problem, query, options)
            reports.append(report)
            code = max(code, query_code)
        payload = reports[0] if len(reports) == 1 else reports
        print(json.dumps(payload, indent=2))
        return code
    except (SemimodError, OSError, ValueError) as exc:
        print(json.dumps(_error_report(exc), indent=2))
        return 2


if __name__ == "__main__":
    sys.exit(main())
