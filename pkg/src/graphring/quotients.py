"""The ring of graph fractions: quotients of signed graphs whose denominator
has nonzero clique functional, with exact rational scalars sitting inside it
as quotients of complete graphs.

Fractions are not reduced to a canonical form; equality is decided by
cross-multiplication in the signed-graph ring, which is the observable
contract.  Norms of fractions are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CliqueZeroDivisionError
from .signed import SignedGraph

__all__ = ["GraphFraction"]


class GraphFraction:
    """Pair numerator/denominator of signed graphs, ``c(denominator) != 0``.

    The denominator is normalized to positive clique functional (the sign
    moves to the numerator).  Immutable; operators return fresh values and
    ``==`` means cross-multiplied equality.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: SignedGraph, denominator: SignedGraph):
        c_den = denominator.clique_functional()
        if c_den == 0:
            raise CliqueZeroDivisionError(
                "denominator has clique functional zero; quotients require c != 0"
            )
        if c_den < 0:
            numerator, denominator = -numerator, -denominator
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("GraphFraction is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_signed(s: SignedGraph) -> "GraphFraction":
        return GraphFraction(s, SignedGraph.from_integer(1))

    @staticmethod
    def from_rational(r) -> "GraphFraction":
        """Scalar embedding ``p/q -> K_p / K_q`` (sign on the numerator)."""
        r = Fraction(r)
        return GraphFraction(
            SignedGraph.from_integer(r.numerator),
            SignedGraph.from_integer(r.denominator),
        )

    @staticmethod
    def zero() -> "GraphFraction":
        return GraphFraction.from_rational(0)

    @staticmethod
    def one() -> "GraphFraction":
        return GraphFraction.from_rational(1)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "GraphFraction") -> "GraphFraction":
        return GraphFraction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> "GraphFraction":
        return GraphFraction(-self.numerator, self.denominator)

    def __sub__(self, other: "GraphFraction") -> "GraphFraction":
        return self + (-other)

    def __mul__(self, other: "GraphFraction") -> "GraphFraction":
        return GraphFraction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def reciprocal(self) -> "GraphFraction":
        if self.numerator.clique_functional() == 0:
            raise CliqueZeroDivisionError(
                "cannot divide: the divisor's numerator has clique functional zero"
            )
        return GraphFraction(self.denominator, self.numerator)

    def __truediv__(self, other: "GraphFraction") -> "GraphFraction":
        return self * other.reciprocal()

    def scalar_mul(self, r) -> "GraphFraction":
        """Multiplication by an exact rational scalar; satisfies
        ``|r * F| == |r| * |F|`` exactly."""
        return GraphFraction.from_rational(r) * self

    # -- comparisons and functionals ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphFraction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None  # type: ignore[assignment]  # equivalence classes lack a cheap hash

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def norm(self) -> Fraction:
        """Extended norm ``|numerator| / |denominator|`` as an exact rational."""
        return Fraction(self.numerator.norm(), self.denominator.norm())

    def as_rational(self) -> Fraction | None:
        """The scalar value when both parts are generated by one-vertex
        primes; ``None`` otherwise."""
        unit_key = next(SignedGraph.from_integer(1).terms())[0]
        for part in (self.numerator, self.denominator):
            for key, _, _ in part.terms():
                if key != unit_key:
                    return None
        return Fraction(
            self.numerator.clique_functional(), self.denominator.clique_functional()
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "GraphFraction(%r / %r)" % (self.numerator, self.denominator)
