"""Expression language for graph arithmetic.

Grammar (EBNF)::

    expr    := term { ("+" | "-") term }
    term    := unary { ("*" | "/") unary }
    unary   := "-" unary | atom
    atom    := INT | literal | call | "(" expr ")"
    literal := "K(" INT ")" | "C(" INT ")" | "E(" INT ")" | "S0" | "Oct"
             | "W(" INT ")" | "Path(" INT ")"
             | "G(" INT "," RATIONAL "," INT ")" | "g6(" STRING ")"
    call    := NAME "(" [expr {"," expr}] ")"

with NAME one of ``c chi genus f fvec norm dist aprime afactor mprime
mfactor ds iso eq``.  A bare integer ``n`` denotes the complete graph on
``n`` vertices (the zero graph for 0), so the language extends ordinary
integer arithmetic.  All binary operators are left associative and unary
minus binds tighter than ``*``.

Values are promoted one way only, Graph -> SignedGraph -> GraphFraction;
``/`` always promotes to a fraction.  Scalars (integers and exact
rationals) ride along and are lifted to complete-graph combinations the
moment they meet a graph value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .canonical import is_isomorphic
from .errors import ExprSyntaxError, ExprTypeError
from .graphs import (
    Graph,
    complete,
    cycle,
    edgeless,
    erdos_renyi,
    join,
    octahedron,
    path,
    sphere0,
    wheel,
    zykov_product,
)
from .invariants import (
    DEFAULT_CLIQUE_BUDGET,
    Polynomial,
    RationalFunction,
    clique_number,
    ds_member,
    euler_characteristic,
    f_function,
    f_vector,
    genus,
)
from .primes import (
    MAX_CATALOG_ORDER,
    MultiplicativeVerdict,
    is_additive_prime,
    is_multiplicative_prime,
    multiplicative_factorizations,
)
from .quotients import GraphFraction
from .serialize import decode_graph6, encode_graph6
from .signed import SignedGraph, signed_f_function

__all__ = [
    "parse",
    "evaluate",
    "eval_text",
    "to_expression",
    "FVectorValue",
    "AdditiveFactors",
    "MultiplicativeFactors",
]

FUNCTIONS = {
    "c": 1,
    "chi": 1,
    "genus": 1,
    "f": 1,
    "fvec": 1,
    "norm": 1,
    "dist": 2,
    "aprime": 1,
    "afactor": 1,
    "mprime": 1,
    "mfactor": 1,
    "ds": 2,
    "iso": 2,
    "eq": 2,
}

_PARAM_LITERALS = {"K", "C", "E", "W", "Path"}
_WORD_LITERALS = {"S0", "Oct"}


# ---------------------------------------------------------------------------
# tokens


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


_SYMBOLS = {
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "/": "SLASH",
    "(": "LPAREN",
    ")": "RPAREN",
    ",": "COMMA",
}


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(_SYMBOLS[ch], ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            kind = "INT"
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
                kind = "DECIMAL"
            tokens.append(Token(kind, text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch == '"':
            j = i + 1
            out = []
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    raise ExprSyntaxError("newline inside string", line, col)
                if text[j] == "\\":
                    if j + 1 >= n or text[j + 1] not in '\\"':
                        raise ExprSyntaxError("bad string escape", line, col + j - i)
                    out.append(text[j + 1])
                    j += 2
                    continue
                out.append(text[j])
                j += 1
            if j >= n:
                raise ExprSyntaxError("unterminated string", line, col)
            tokens.append(Token("STRING", "".join(out), line, col))
            col += j + 1 - i
            i = j + 1
            continue
        raise ExprSyntaxError("unexpected character %r" % ch, line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Node:
    line: int
    col: int


@dataclass(frozen=True)
class IntLit(Node):
    value: int


@dataclass(frozen=True)
class GraphLit(Node):
    kind: str
    params: tuple


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: tuple


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            got = repr(tok.text) if tok.text else "end of input"
            raise ExprSyntaxError(
                "unexpected %s" % got, tok.line, tok.col, expected=[what]
            )
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ExprSyntaxError(
                "trailing input %r" % tok.text, tok.line, tok.col, expected=["end of input"]
            )
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind in ("PLUS", "MINUS"):
            tok = self.advance()
            rhs = self.term()
            node = BinOp(tok.line, tok.col, "+" if tok.kind == "PLUS" else "-", node, rhs)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().kind in ("STAR", "SLASH"):
            tok = self.advance()
            rhs = self.unary()
            node = BinOp(tok.line, tok.col, "*" if tok.kind == "STAR" else "/", node, rhs)
        return node

    def unary(self) -> Node:
        tok = self.peek()
        if tok.kind == "MINUS":
            self.advance()
            return Neg(tok.line, tok.col, self.unary())
        return self.atom()

    def atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return IntLit(tok.line, tok.col, int(tok.text))
        if tok.kind == "LPAREN":
            self.advance()
            node = self.expr()
            self.expect("RPAREN", "')'")
            return node
        if tok.kind == "NAME":
            return self.name_atom()
        got = repr(tok.text) if tok.text else "end of input"
        raise ExprSyntaxError(
            "unexpected %s" % got,
            tok.line,
            tok.col,
            expected=["integer", "literal", "function call", "'('"],
        )

    def name_atom(self) -> Node:
        tok = self.advance()
        name = tok.text
        if name in _WORD_LITERALS:
            return GraphLit(tok.line, tok.col, name, ())
        if name in _PARAM_LITERALS:
            self.expect("LPAREN", "'('")
            count = int(self.expect("INT", "integer").text)
            self.expect("RPAREN", "')'")
            return GraphLit(tok.line, tok.col, name, (count,))
        if name == "G":
            self.expect("LPAREN", "'('")
            count = int(self.expect("INT", "integer").text)
            self.expect("COMMA", "','")
            prob = self.rational()
            self.expect("COMMA", "','")
            seed = int(self.expect("INT", "integer").text)
            self.expect("RPAREN", "')'")
            return GraphLit(tok.line, tok.col, "G", (count, prob, seed))
        if name == "g6":
            self.expect("LPAREN", "'('")
            text = self.expect("STRING", "string").text
            self.expect("RPAREN", "')'")
            return GraphLit(tok.line, tok.col, "g6", (text,))
        if name in FUNCTIONS:
            self.expect("LPAREN", "'('")
            args: list[Node] = []
            if self.peek().kind != "RPAREN":
                args.append(self.expr())
                while self.peek().kind == "COMMA":
                    self.advance()
                    args.append(self.expr())
            closing = self.expect("RPAREN", "')'")
            if len(args) != FUNCTIONS[name]:
                raise ExprSyntaxError(
                    "%s takes %d argument(s), got %d" % (name, FUNCTIONS[name], len(args)),
                    closing.line,
                    closing.col,
                )
            return Call(tok.line, tok.col, name, tuple(args))
        raise ExprSyntaxError(
            "unknown name %r" % name,
            tok.line,
            tok.col,
            expected=sorted(FUNCTIONS) + ["a graph literal"],
        )

    def rational(self) -> Fraction:
        tok = self.peek()
        if tok.kind == "DECIMAL":
            self.advance()
            return Fraction(tok.text)
        num = int(self.expect("INT", "number").text)
        if self.peek().kind == "SLASH":
            self.advance()
            den = int(self.expect("INT", "integer").text)
            if den == 0:
                raise ExprSyntaxError("zero denominator in probability", tok.line, tok.col)
            return Fraction(num, den)
        return Fraction(num)


def parse(text: str) -> Node:
    """Parse an expression; syntax errors carry line:column positions."""
    return _Parser(_tokenize(text)).parse()


# ---------------------------------------------------------------------------
# values


@dataclass(frozen=True)
class FVectorValue:
    counts: tuple[int, ...]


@dataclass(frozen=True)
class AdditiveFactors:
    """Additive prime factors with multiplicities, sorted by canonical key."""

    factors: tuple[tuple[Graph, int], ...]


@dataclass(frozen=True)
class MultiplicativeFactors:
    pairs: tuple[tuple[Graph, Graph], ...]


_OPAQUE = (
    Polynomial,
    RationalFunction,
    FVectorValue,
    AdditiveFactors,
    MultiplicativeFactors,
    MultiplicativeVerdict,
)


def _kind_name(value) -> str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, int):
        return "integer"
    if isinstance(value, Fraction):
        return "rational"
    if isinstance(value, Graph):
        return "graph"
    if isinstance(value, SignedGraph):
        return "signed graph"
    if isinstance(value, GraphFraction):
        return "graph fraction"
    if isinstance(value, Polynomial):
        return "polynomial"
    if isinstance(value, RationalFunction):
        return "rational function"
    if isinstance(value, FVectorValue):
        return "f-vector"
    if isinstance(value, (AdditiveFactors, MultiplicativeFactors)):
        return "factor list"
    if isinstance(value, MultiplicativeVerdict):
        return "verdict"
    return type(value).__name__


class Evaluator:
    """Evaluates syntax trees to values; deterministic and total (every
    input yields a value or one structured error)."""

    def __init__(
        self,
        clique_budget: int = DEFAULT_CLIQUE_BUDGET,
        catalog_budget: int = MAX_CATALOG_ORDER,
    ):
        self.clique_budget = clique_budget
        self.catalog_budget = catalog_budget

    # -- promotions ----------------------------------------------------

    def _fail(self, node: Node, message: str):
        raise ExprTypeError("%s (at %d:%d)" % (message, node.line, node.col))

    def _as_graph(self, value, node: Node, what: str) -> Graph:
        if isinstance(value, bool):
            self._fail(node, "%s cannot take a boolean" % what)
        if isinstance(value, Graph):
            return value
        if isinstance(value, int):
            if value < 0:
                self._fail(node, "%s needs a graph; %d is a negative scalar" % (what, value))
            return complete(value)
        self._fail(node, "%s cannot take a %s" % (what, _kind_name(value)))

    def _as_signed(self, value, node: Node, what: str) -> SignedGraph:
        if isinstance(value, bool):
            self._fail(node, "%s cannot take a boolean" % what)
        if isinstance(value, SignedGraph):
            return value
        if isinstance(value, Graph):
            return SignedGraph.from_graph(value)
        if isinstance(value, int):
            return SignedGraph.from_integer(value)
        self._fail(node, "%s cannot take a %s" % (what, _kind_name(value)))

    def _as_fraction(self, value, node: Node, what: str) -> GraphFraction:
        if isinstance(value, GraphFraction):
            return value
        if isinstance(value, Fraction):
            return GraphFraction.from_rational(value)
        return GraphFraction.from_signed(self._as_signed(value, node, what))

    # -- evaluation ------------------------------------------------------

    def evaluate(self, node: Node):
        if isinstance(node, IntLit):
            return node.value
        if isinstance(node, GraphLit):
            return self._literal(node)
        if isinstance(node, Neg):
            return self._negate(self.evaluate(node.operand), node)
        if isinstance(node, BinOp):
            return self._binop(node.op, self.evaluate(node.left), self.evaluate(node.right), node)
        if isinstance(node, Call):
            return self._call(node.name, [self.evaluate(a) for a in node.args], node)
        raise AssertionError("unhandled node %r" % node)

    def _literal(self, node: GraphLit):
        kind, params = node.kind, node.params
        if kind == "K":
            return complete(params[0])
        if kind == "E":
            return edgeless(params[0])
        if kind == "C":
            return cycle(params[0])
        if kind == "W":
            return wheel(params[0])
        if kind == "Path":
            return path(params[0])
        if kind == "S0":
            return sphere0()
        if kind == "Oct":
            return octahedron()
        if kind == "G":
            count, prob, seed = params
            return erdos_renyi(count, prob, seed)
        if kind == "g6":
            return decode_graph6(params[0])
        raise AssertionError("unhandled literal %r" % kind)

    def _negate(self, value, node: Node):
        if isinstance(value, bool):
            self._fail(node, "unary '-' cannot take a boolean")
        if isinstance(value, (int, Fraction)):
            return -value
        if isinstance(value, Graph):
            return -SignedGraph.from_graph(value)
        if isinstance(value, (SignedGraph, GraphFraction)):
            return -value
        self._fail(node, "unary '-' cannot take a %s" % _kind_name(value))

    def _binop(self, op: str, left, right, node: Node):
        what = "operator '%s'" % op
        for value in (left, right):
            if isinstance(value, bool) or isinstance(value, _OPAQUE):
                self._fail(node, "%s cannot take a %s" % (what, _kind_name(value)))
        if op == "/":
            return self._as_fraction(left, node, what) / self._as_fraction(right, node, what)
        if isinstance(left, int) and isinstance(right, int):
            return left + right if op == "+" else left - right if op == "-" else left * right
        if isinstance(left, (int, Fraction)) and isinstance(right, (int, Fraction)):
            a, b = Fraction(left), Fraction(right)
            return a + b if op == "+" else a - b if op == "-" else a * b
        if (
            isinstance(left, (GraphFraction, Fraction))
            or isinstance(right, (GraphFraction, Fraction))
        ):
            a = self._as_fraction(left, node, what)
            b = self._as_fraction(right, node, what)
            return a + b if op == "+" else a - b if op == "-" else a * b
        needs_signed = (
            op == "-"
            or isinstance(left, SignedGraph)
            or isinstance(right, SignedGraph)
            or (isinstance(left, int) and left < 0)
            or (isinstance(right, int) and right < 0)
        )
        if needs_signed:
            a = self._as_signed(left, node, what)
            b = self._as_signed(right, node, what)
            return a + b if op == "+" else a - b if op == "-" else a * b
        a = self._as_graph(left, node, what)
        b = self._as_graph(right, node, what)
        return join(a, b) if op == "+" else zykov_product(a, b)

    def _call(self, name: str, args: list, node: Node):
        what = "function '%s'" % name
        if name == "c":
            value = args[0]
            if isinstance(value, bool):
                self._fail(node, "%s cannot take a boolean" % what)
            if isinstance(value, int):
                return value
            if isinstance(value, Graph):
                return clique_number(value)
            if isinstance(value, SignedGraph):
                return value.clique_functional()
            if isinstance(value, GraphFraction):
                self._fail(
                    node,
                    "the clique functional does not extend to graph fractions",
                )
            self._fail(node, "%s cannot take a %s" % (what, _kind_name(value)))
        if name == "chi":
            return euler_characteristic(self._as_graph(args[0], node, what))
        if name == "genus":
            return genus(self._as_graph(args[0], node, what))
        if name == "f":
            value = args[0]
            if isinstance(value, SignedGraph):
                return signed_f_function(value, self.clique_budget)
            if isinstance(value, GraphFraction):
                self._fail(node, "%s cannot take a graph fraction" % what)
            return f_function(self._as_graph(value, node, what), self.clique_budget)
        if name == "fvec":
            value = args[0]
            if isinstance(value, (SignedGraph, GraphFraction)):
                self._fail(node, "%s cannot take a %s" % (what, _kind_name(value)))
            return FVectorValue(f_vector(self._as_graph(value, node, what), self.clique_budget))
        if name == "norm":
            value = args[0]
            if isinstance(value, bool):
                self._fail(node, "%s cannot take a boolean" % what)
            if isinstance(value, int):
                return abs(value)
            if isinstance(value, Fraction):
                return abs(value)
            if isinstance(value, Graph):
                return SignedGraph.from_graph(value).norm()
            if isinstance(value, SignedGraph):
                return value.norm()
            if isinstance(value, GraphFraction):
                return value.norm()
            self._fail(node, "%s cannot take a %s" % (what, _kind_name(value)))
        if name == "dist":
            a = self._as_signed(args[0], node, what)
            b = self._as_signed(args[1], node, what)
            return a.distance(b)
        if name == "aprime":
            return is_additive_prime(self._as_graph(args[0], node, what))
        if name == "afactor":
            signed = SignedGraph.from_graph(self._as_graph(args[0], node, what))
            return AdditiveFactors(tuple((rep, mult) for _, rep, mult in signed.terms()))
        if name == "mprime":
            return is_multiplicative_prime(
                self._as_graph(args[0], node, what), self.catalog_budget
            )
        if name == "mfactor":
            return MultiplicativeFactors(
                tuple(
                    multiplicative_factorizations(
                        self._as_graph(args[0], node, what), self.catalog_budget
                    )
                )
            )
        if name == "ds":
            g = self._as_graph(args[0], node, what)
            d = args[1]
            if isinstance(d, bool) or not isinstance(d, int):
                self._fail(node, "%s needs an integer dimension" % what)
            return ds_member(g, d)
        if name == "iso":
            a = self._as_graph(args[0], node, what)
            b = self._as_graph(args[1], node, what)
            return is_isomorphic(a, b)
        if name == "eq":
            return self._equals(args[0], args[1], node)
        raise AssertionError("unhandled function %r" % name)

    def _equals(self, left, right, node: Node) -> bool:
        what = "function 'eq'"
        if isinstance(left, GraphFraction) or isinstance(right, GraphFraction):
            return self._as_fraction(left, node, what) == self._as_fraction(right, node, what)
        if isinstance(left, SignedGraph) or isinstance(right, SignedGraph):
            return self._as_signed(left, node, what) == self._as_signed(right, node, what)
        if isinstance(left, Graph) or isinstance(right, Graph):
            return is_isomorphic(
                self._as_graph(left, node, what), self._as_graph(right, node, what)
            )
        if isinstance(left, bool) and isinstance(right, bool):
            return left == right
        if isinstance(left, bool) or isinstance(right, bool):
            self._fail(node, "%s cannot compare a boolean with a non-boolean" % what)
        if isinstance(left, (int, Fraction)) and isinstance(right, (int, Fraction)):
            return Fraction(left) == Fraction(right)
        if type(left) is type(right) and isinstance(left, _OPAQUE):
            return left == right
        self._fail(
            node,
            "%s cannot compare %s with %s" % (what, _kind_name(left), _kind_name(right)),
        )


def evaluate(node: Node, **options):
    return Evaluator(**options).evaluate(node)


def eval_text(text: str, **options):
    return Evaluator(**options).evaluate(parse(text))


# ---------------------------------------------------------------------------
# printing values back to expressions


def _g6_literal(g: Graph) -> str:
    return 'g6("%s")' % encode_graph6(g).replace("\\", "\\\\")


def _signed_expression(s: SignedGraph) -> str:
    if s.is_zero():
        return "0"
    pieces = []
    for _, rep, mult in s.terms():
        lit = _g6_literal(rep)
        body = lit if abs(mult) == 1 else "%d*%s" % (abs(mult), lit)
        pieces.append(("-" if mult < 0 else "+", body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += " %s %s" % (sign, body)
    return text


def to_expression(value) -> str:
    """Render a value as an expression that re-evaluates to an ``eq``-equal
    value.  Only graphs, signed graphs, fractions, and scalars have
    generating expressions."""
    if isinstance(value, bool):
        raise ExprTypeError("booleans have no generating expression")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, Graph):
        return _g6_literal(value)
    if isinstance(value, SignedGraph):
        return _signed_expression(value)
    if isinstance(value, GraphFraction):
        return "(%s)/(%s)" % (
            _signed_expression(value.numerator),
            _signed_expression(value.denominator),
        )
    raise ExprTypeError("%s values have no generating expression" % _kind_name(value))
