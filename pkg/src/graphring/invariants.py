"""Clique-based invariants: clique number, f-vector and f-function, Euler
characteristic, genus, and Dehn-Sommerville class membership.

Everything here is exact integer arithmetic; no floating point.  The clique
number is computed by additive decomposition (it adds over join factors)
followed by branch and bound with a greedy-coloring bound on each factor.
Clique counting walks every clique once, guarded by a configurable budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .canonical import canonical_key
from .errors import InputError, ResourceBudgetError
from .graphs import Graph, join_factors, unit_sphere

__all__ = [
    "DEFAULT_CLIQUE_BUDGET",
    "Polynomial",
    "RationalFunction",
    "clique_number",
    "f_vector",
    "f_function",
    "euler_characteristic",
    "genus",
    "ds_member",
]

DEFAULT_CLIQUE_BUDGET = 10_000_000


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial, coefficients ascending, no trailing zeros."""

    coeffs: tuple[int, ...]

    @staticmethod
    def make(coeffs) -> "Polynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return Polynomial(tuple(cs))

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        out = [0] * size
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return Polynomial.make(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial.make(out)

    def __call__(self, x):
        """Exact evaluation (ints and Fractions stay exact)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                t = "t" if k == 1 else "t^%d" % k
                if c == 1:
                    terms.append(t)
                elif c == -1:
                    terms.append("-" + t)
                else:
                    terms.append("%d*%s" % (c, t))
        text = " + ".join(terms)
        return text.replace("+ -", "- ")


def _content(p: Polynomial) -> int:
    g = 0
    for c in p.coeffs:
        g = gcd(g, abs(c))
    return g


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of integer polynomials.

    Stored with the joint integer content divided out and a positive leading
    denominator coefficient; equality is by cross-multiplication, so no
    polynomial gcd is ever needed.
    """

    numerator: Polynomial
    denominator: Polynomial

    @staticmethod
    def make(num: Polynomial, den: Polynomial) -> "RationalFunction":
        if den.is_zero():
            raise InputError("rational function with zero denominator")
        if den.coeffs[-1] < 0:
            num, den = -num, -den
        shared = gcd(_content(num), _content(den))
        if shared > 1:
            num = Polynomial(tuple(c // shared for c in num.coeffs))
            den = Polynomial(tuple(c // shared for c in den.coeffs))
        return RationalFunction(num, den)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self) -> int:
        # Weak but consistent: cross-multiplied equality can merge distinct
        # stored pairs, so hash only degree data that equality preserves.
        return hash(self.numerator.degree - self.denominator.degree)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __str__(self) -> str:
        if self.denominator == Polynomial.one():
            return str(self.numerator)
        return "(%s) / (%s)" % (self.numerator, self.denominator)


# ---------------------------------------------------------------------------
# clique number


def _greedy_color_order(rows: tuple[int, ...], candidates: int):
    """Greedy coloring of the candidate set; returns (vertex, bound) pairs
    with bound ascending, where bound is the color index + 1."""
    classes: list[int] = []
    out: list[list[int]] = []
    m = candidates
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        for k, cls in enumerate(classes):
            if not (rows[v] & cls):
                classes[k] = cls | low
                out[k].append(v)
                break
        else:
            classes.append(low)
            out.append([v])
    pairs = []
    for k, members in enumerate(out):
        for v in members:
            pairs.append((v, k + 1))
    pairs.sort(key=lambda p: p[1])
    return pairs


def _max_clique_connected(rows: tuple[int, ...], n: int) -> int:
    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        pairs = _greedy_color_order(rows, candidates)
        avail = candidates
        for v, bound in reversed(pairs):
            if size + bound <= best:
                return
            nxt = avail & rows[v]
            if nxt:
                expand(nxt, size + 1)
            elif size + 1 > best:
                best = size + 1
            avail ^= 1 << v

    expand((1 << n) - 1, 0)
    return best


@lru_cache(maxsize=100_000)
def clique_number(g: Graph) -> int:
    """Order of the largest complete subgraph; 0 for the zero graph.

    Adds over join factors, so joins of many small pieces stay cheap; the
    branch and bound only ever runs on additively prime graphs.
    """
    if g.n == 0:
        return 0
    factors = join_factors(g)
    if len(factors) > 1:
        return sum(clique_number(f) for f in factors)
    return _max_clique_connected(g.rows, g.n)


# ---------------------------------------------------------------------------
# clique counting


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise ResourceBudgetError(
                "clique count exceeds the enumeration budget; raise it to proceed"
            )


def _count_cliques(rows: tuple[int, ...], n: int, budget: _Budget) -> list[int]:
    """Number of (k+1)-cliques for each k, by ascending-vertex recursion
    that visits every clique exactly once."""
    counts: list[int] = []

    def expand(candidates: int, depth: int) -> None:
        if depth == len(counts):
            counts.append(0)
        m = candidates
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            counts[depth] += 1
            budget.spend()
            deeper = candidates & rows[v] & ~((low << 1) - 1)
            if deeper:
                expand(deeper, depth + 1)

    expand((1 << n) - 1, 0)
    return counts


@lru_cache(maxsize=50_000)
def _prime_f_function(g: Graph, budget_limit: int) -> Polynomial:
    budget = _Budget(budget_limit)
    counts = _count_cliques(g.rows, g.n, budget)
    return Polynomial.make([1] + counts)


def f_function(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET) -> Polynomial:
    """Clique generating polynomial ``1 + f0*t + f1*t^2 + ...``.

    Multiplicative over the join, so the polynomial is assembled from the
    additive factors; the budget bounds the total clique count either way.
    """
    poly = Polynomial.one()
    for factor in join_factors(g):
        poly = poly * _prime_f_function(factor, budget)
        if sum(poly.coeffs) - 1 > budget:
            raise ResourceBudgetError(
                "clique count %d exceeds the enumeration budget %d"
                % (sum(poly.coeffs) - 1, budget)
            )
    return poly


def f_vector(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET) -> tuple[int, ...]:
    """Counts ``(f0, f1, ...)`` of cliques by size; length equals the clique
    number and ``f0`` is the vertex count."""
    return tuple(f_function(g, budget).coeffs[1:])


def euler_characteristic(g: Graph) -> int:
    """``f0 - f1 + f2 - ... = 1 - f(-1)``.

    Evaluated factor by factor at ``t = -1`` so that large joins never
    enumerate their (exponentially many) cliques.
    """
    value = 1
    for factor in join_factors(g):
        value *= _prime_f_function(factor, DEFAULT_CLIQUE_BUDGET)(-1)
    return 1 - value


def genus(g: Graph) -> int:
    """``1 - euler_characteristic``; multiplicative over the join."""
    return 1 - euler_characteristic(g)


# ---------------------------------------------------------------------------
# Dehn-Sommerville classes

_DS_MEMO: dict[tuple[bytes, int], bool] = {}


def ds_member(g: Graph, d: int) -> bool:
    """Membership in the Dehn-Sommerville class of dimension ``d``.

    ``d = -1`` holds exactly for the zero graph.  For ``d >= 0`` the graph
    must be nonempty, have Euler characteristic ``1 + (-1)**d``, and every
    unit sphere must lie in the class of dimension ``d - 1``.  Results are
    memoized by canonical key, so repeated sphere checks are cheap.
    """
    if d < -1:
        raise InputError("dimension must be >= -1, got %d" % d)
    if d == -1:
        return g.n == 0
    if g.n == 0:
        return False
    memo_key = (canonical_key(g), d)
    cached = _DS_MEMO.get(memo_key)
    if cached is not None:
        return cached
    ok = euler_characteristic(g) == 1 + (-1) ** d
    if ok:
        for v in range(g.n):
            if not ds_member(unit_sphere(g, v), d - 1):
                ok = False
                break
    _DS_MEMO[memo_key] = ok
    return ok
