"""Command line interface.

Subcommands: ``eval``, ``factor``, ``fib``, ``catalog``, ``selftest``,
``convert``.  Exit codes: 0 success, 2 parse/type/input error, 3 division
by a clique-zero element, 4 resource budget exceeded (1 is reserved for
selftest failures).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .canonical import is_isomorphic
from .errors import (
    CliqueZeroDivisionError,
    ExprSyntaxError,
    ExprTypeError,
    FormatError,
    GraphRingError,
    InputError,
    ResourceBudgetError,
)
from .exprlang import (
    AdditiveFactors,
    Evaluator,
    FVectorValue,
    MultiplicativeFactors,
    parse,
    to_expression,
)
from .graphs import (
    Graph,
    complement,
    disjoint_union,
    erdos_renyi,
    join,
    splitmix64,
    zykov_product,
)
from .invariants import (
    DEFAULT_CLIQUE_BUDGET,
    Polynomial,
    RationalFunction,
    clique_number,
)
from .primes import MAX_CATALOG_ORDER, MultiplicativeVerdict, graphs_of_order
from .quotients import GraphFraction
from .sequences import fibonacci_report
from .serialize import (
    decode_graph6,
    encode_graph6,
    export_dot,
    export_edge_list,
    parse_edge_list,
)
from .signed import SignedGraph

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CLIQUE_ZERO = 3
EXIT_BUDGET = 4


# ---------------------------------------------------------------------------
# value formatting


def _signed_json(s: SignedGraph) -> list[dict]:
    return [
        {"prime_g6": encode_graph6(rep), "mult": mult} for _, rep, mult in s.terms()
    ]


def _rational_str(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return "%d/%d" % (r.numerator, r.denominator)


def format_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return _rational_str(value)
    if isinstance(value, Graph):
        return "%s  [%d vertices, %d edges]" % (
            to_expression(value),
            value.n,
            value.edge_count(),
        )
    if isinstance(value, SignedGraph):
        return "%s  [norm %d]" % (to_expression(value), value.norm())
    if isinstance(value, GraphFraction):
        scalar = value.as_rational()
        extra = ", value %s" % _rational_str(scalar) if scalar is not None else ""
        return "%s  [norm %s%s]" % (
            to_expression(value),
            _rational_str(value.norm()),
            extra,
        )
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, RationalFunction):
        return str(value)
    if isinstance(value, FVectorValue):
        return "(%s)" % ", ".join(str(c) for c in value.counts)
    if isinstance(value, AdditiveFactors):
        if not value.factors:
            return "0"
        parts = []
        for rep, mult in value.factors:
            lit = to_expression(rep)
            parts.append(lit if mult == 1 else "%d*%s" % (mult, lit))
        return " + ".join(parts)
    if isinstance(value, MultiplicativeFactors):
        if not value.pairs:
            return "no factor pairs"
        return "\n".join(
            "%s * %s" % (to_expression(a), to_expression(b)) for a, b in value.pairs
        )
    if isinstance(value, MultiplicativeVerdict):
        return value.status + (" (unit)" if value.is_unit else "")
    raise ExprTypeError("cannot format %r" % (value,))


def format_json(value) -> str:
    if isinstance(value, bool):
        doc = {"type": "boolean", "value": value}
    elif isinstance(value, int):
        doc = {"type": "integer", "value": value}
    elif isinstance(value, Fraction):
        doc = {"type": "rational", "value": _rational_str(value)}
    elif isinstance(value, Graph):
        doc = {
            "type": "graph",
            "graph6": encode_graph6(value),
            "vertices": value.n,
            "edges": value.edge_count(),
        }
    elif isinstance(value, SignedGraph):
        doc = {"type": "signed", "signed": _signed_json(value), "norm": value.norm()}
    elif isinstance(value, GraphFraction):
        scalar = value.as_rational()
        doc = {
            "type": "fraction",
            "numerator": _signed_json(value.numerator),
            "denominator": _signed_json(value.denominator),
            "norm": _rational_str(value.norm()),
            "value": _rational_str(scalar) if scalar is not None else None,
        }
    elif isinstance(value, Polynomial):
        doc = {"type": "polynomial", "coefficients": list(value.coeffs)}
    elif isinstance(value, RationalFunction):
        doc = {
            "type": "rational_function",
            "numerator": list(value.numerator.coeffs),
            "denominator": list(value.denominator.coeffs),
        }
    elif isinstance(value, FVectorValue):
        doc = {"type": "fvector", "value": list(value.counts)}
    elif isinstance(value, AdditiveFactors):
        doc = {
            "type": "factors",
            "kind": "additive",
            "factors": [
                {"prime_g6": encode_graph6(rep), "mult": mult}
                for rep, mult in value.factors
            ],
        }
    elif isinstance(value, MultiplicativeFactors):
        doc = {
            "type": "factors",
            "kind": "multiplicative",
            "pairs": [[encode_graph6(a), encode_graph6(b)] for a, b in value.pairs],
        }
    elif isinstance(value, MultiplicativeVerdict):
        doc = {"type": "verdict", "value": value.status, "unit": value.is_unit}
    else:
        raise ExprTypeError("cannot format %r" % (value,))
    return json.dumps(doc)


def format_value(value, fmt: str) -> str:
    if fmt == "text":
        return format_text(value)
    if fmt == "json":
        return format_json(value)
    if fmt == "graph6":
        if not isinstance(value, Graph):
            raise ExprTypeError(
                "graph6 output needs a graph value, got %s" % type(value).__name__
            )
        return encode_graph6(value)
    if fmt == "dot":
        if not isinstance(value, Graph):
            raise ExprTypeError(
                "dot output needs a graph value, got %s" % type(value).__name__
            )
        return export_dot(value).rstrip("\n")
    raise InputError("unknown format %r" % fmt)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_eval(args) -> int:
    evaluator = Evaluator(clique_budget=args.budget)
    value = evaluator.evaluate(parse(args.expression))
    print(format_value(value, args.format))
    return EXIT_OK


def _cmd_factor(args) -> int:
    evaluator = Evaluator(clique_budget=args.budget)
    tree = parse(
        ("mfactor(%s)" if args.multiplicative else "afactor(%s)") % args.expression
    )
    value = evaluator.evaluate(tree)
    print(format_value(value, args.format))
    return EXIT_OK


def _cmd_fib(args) -> int:
    evaluator = Evaluator(clique_budget=args.budget)
    start0 = evaluator.evaluate(parse(args.start0))
    start1 = evaluator.evaluate(parse(args.start1))
    for name, value in (("start0", start0), ("start1", start1)):
        if not isinstance(value, Graph):
            raise ExprTypeError("--%s must evaluate to a graph" % name)
    report = fibonacci_report(start0, start1, args.steps, max_vertices=args.max_vertices)
    if args.format == "json":
        doc = {
            "steps": [
                {
                    "step": s.index,
                    "vertices": s.vertex_count,
                    "clique": s.clique_number,
                    "ds_dimension": s.ds_dimension,
                    "ratio": _rational_str(s.ratio) if s.ratio is not None else None,
                }
                for s in report.steps
            ]
        }
        print(json.dumps(doc))
    else:
        print("step,vertices,clique,ds_dimension,ratio")
        for s in report.steps:
            print(
                "%d,%d,%d,%s,%s"
                % (
                    s.index,
                    s.vertex_count,
                    s.clique_number,
                    "" if s.ds_dimension is None else s.ds_dimension,
                    "" if s.ratio is None else _rational_str(s.ratio),
                )
            )
    return EXIT_OK


def _cmd_catalog(args) -> int:
    for g in graphs_of_order(args.order):
        print(encode_graph6(g))
    return EXIT_OK


def _cmd_convert(args) -> int:
    payload = args.input if args.input is not None else sys.stdin.read()
    if args.source == "g6":
        g = decode_graph6(payload)
    else:
        g = parse_edge_list(payload)
    if args.target == "g6":
        print(encode_graph6(g))
    elif args.target == "dot":
        print(export_dot(g), end="")
    else:
        print(export_edge_list(g), end="")
    return EXIT_OK


def _selftest_corpus(seed: int, trials: int) -> list[tuple[Graph, Graph, Graph]]:
    stream = splitmix64(seed)
    triples = []
    for _ in range(trials):
        sizes = [2 + next(stream) % 4 for _ in range(3)]
        seeds = [next(stream) for _ in range(3)]
        triples.append(
            tuple(
                erdos_renyi(n, Fraction(1, 2), s) for n, s in zip(sizes, seeds)
            )
        )
    return triples


def _cmd_selftest(args) -> int:
    failures = 0

    def check(label: str, ok: bool) -> None:
        nonlocal failures
        print("%-28s %s" % (label, "ok" if ok else "FAILED"))
        if not ok:
            failures += 1

    triples = _selftest_corpus(args.corpus_seed, args.trials)
    ring = True
    homo = True
    dual = True
    for a, b, c in triples:
        ring &= is_isomorphic(join(a, b), join(b, a))
        ring &= is_isomorphic(zykov_product(a, b), zykov_product(b, a))
        ring &= join(join(a, b), c) == join(a, join(b, c))
        ring &= zykov_product(zykov_product(a, b), c) == zykov_product(
            a, zykov_product(b, c)
        )
        ring &= is_isomorphic(
            zykov_product(a, join(b, c)),
            join(zykov_product(a, b), zykov_product(a, c)),
        )
        homo &= clique_number(join(a, b)) == clique_number(a) + clique_number(b)
        homo &= clique_number(zykov_product(a, b)) == clique_number(a) * clique_number(b)
        dual &= complement(join(a, b)) == disjoint_union(complement(a), complement(b))
    check("ring laws (%d triples)" % len(triples), ring)
    check("clique homomorphism", homo)
    check("complement duality", dual)

    norm_ok = True
    congruence_ok = True
    for a, b, c in triples:
        s = SignedGraph.from_graph(a) - SignedGraph.from_graph(b)
        t = SignedGraph.from_graph(b) - SignedGraph.from_graph(c)
        norm_ok &= s.norm() >= 0 and (s.norm() == 0) == s.is_zero()
        norm_ok &= s.distance(t) == t.distance(s)
        norm_ok &= s.distance(t) <= s.norm() + t.norm()
        norm_ok &= (s * t).norm() <= s.norm() * t.norm()
        u = SignedGraph.from_graph(c) + SignedGraph.from_integer(1)
        frac = GraphFraction(s, u)
        congruence_ok &= frac * GraphFraction(u, u) == frac
    check("norm axioms", norm_ok)
    check("fraction congruence", congruence_ok)

    roundtrip = all(
        decode_graph6(encode_graph6(g)) == g
        for order in range(5)
        for g in graphs_of_order(order)
    )
    check("graph6 round trip", roundtrip)

    if failures:
        print("selftest: %d suite(s) FAILED (seed %d)" % (failures, args.corpus_seed))
        return 1
    print("selftest: all suites passed (seed %d)" % args.corpus_seed)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphring",
        description="Exact arithmetic in the ring of finite simple graphs.",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_CLIQUE_BUDGET,
        help="clique enumeration budget (default %d)" % DEFAULT_CLIQUE_BUDGET,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expression")
    p_eval.add_argument(
        "--format", choices=["text", "json", "graph6", "dot"], default="text"
    )
    p_eval.set_defaults(func=_cmd_eval)

    p_factor = sub.add_parser("factor", help="factor a graph expression")
    p_factor.add_argument("expression")
    p_factor.add_argument("--multiplicative", action="store_true")
    p_factor.add_argument("--format", choices=["text", "json"], default="text")
    p_factor.set_defaults(func=_cmd_factor)

    p_fib = sub.add_parser("fib", help="graph Fibonacci iteration report")
    p_fib.add_argument("--start0", required=True)
    p_fib.add_argument("--start1", required=True)
    p_fib.add_argument("--steps", type=int, required=True)
    p_fib.add_argument("--format", choices=["json", "csv"], default="csv")
    p_fib.add_argument("--max-vertices", type=int, default=2000)
    p_fib.set_defaults(func=_cmd_fib)

    p_cat = sub.add_parser("catalog", help="all graphs of one order, up to isomorphism")
    p_cat.add_argument("--order", type=int, required=True)
    p_cat.set_defaults(func=_cmd_catalog)

    p_self = sub.add_parser("selftest", help="run the built-in property checks")
    p_self.add_argument("--corpus-seed", type=int, default=7)
    p_self.add_argument("--trials", type=int, default=25)
    p_self.set_defaults(func=_cmd_selftest)

    p_conv = sub.add_parser("convert", help="convert between graph formats")
    p_conv.add_argument("--from", dest="source", choices=["g6", "edgelist"], required=True)
    p_conv.add_argument("--to", dest="target", choices=["g6", "dot", "edgelist"], required=True)
    p_conv.add_argument("input", nargs="?", default=None, help="payload (stdin if omitted)")
    p_conv.set_defaults(func=_cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CliqueZeroDivisionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CLIQUE_ZERO
    except ResourceBudgetError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (ExprSyntaxError, ExprTypeError, InputError, FormatError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except GraphRingError as exc:  # pragma: no cover - safety net
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
