"""The additive group completion of the join monoid, with its ring
structure, clique functional, norm, and metric.

A signed graph is a formal integer combination of additive primes (graphs
with connected complement).  Because every graph factors uniquely into
additive primes, storing the combination keyed by canonical prime keys
makes the representation automatically reduced: the positive and negative
parts never share a factor, cancellation is literal dictionary arithmetic,
and the norm infimum is attained at the stored representation.
"""

from __future__ import annotations

from typing import Iterator

from .canonical import canonical_graph, canonical_key
from .graphs import Graph, join_all, join_factors, zykov_product
from .invariants import (
    DEFAULT_CLIQUE_BUDGET,
    Polynomial,
    RationalFunction,
    clique_number,
    f_function,
)

__all__ = ["SignedGraph", "additive_factorize", "signed_f_function"]


def additive_factorize(g: Graph) -> list[tuple[Graph, bytes]]:
    """Additive prime factors of ``g`` with their canonical keys.

    Factors keep the labeling inherited from ``g`` (complement components,
    complemented back); joining them in order reproduces a graph isomorphic
    to ``g``.  The zero graph yields the empty list.
    """
    return [(f, canonical_key(f)) for f in join_factors(g)]


# Cache of prime-pair products: (key_a, key_b) -> ((prime_key, canonical rep,
# multiplicity), ...).  Products recur constantly in ring-law and norm tests.
_PRODUCT_CACHE: dict[tuple[bytes, bytes], tuple[tuple[bytes, Graph, int], ...]] = {}


def _product_terms(a: Graph, ka: bytes, b: Graph, kb: bytes):
    if kb < ka:
        a, ka, b, kb = b, kb, a, ka
    cached = _PRODUCT_CACHE.get((ka, kb))
    if cached is None:
        acc: dict[bytes, list] = {}
        for factor, key in additive_factorize(zykov_product(a, b)):
            entry = acc.get(key)
            if entry is None:
                acc[key] = [canonical_graph(factor), 1]
            else:
                entry[1] += 1
        cached = tuple((key, rep, mult) for key, (rep, mult) in sorted(acc.items()))
        _PRODUCT_CACHE[(ka, kb)] = cached
    return cached


class SignedGraph:
    """Element of the signed-graph ring: primes mapped to multiplicities.

    Instances are immutable; all operators return fresh values.  Iteration
    and every derived quantity run in sorted key order, so results are
    deterministic regardless of construction history.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[bytes, tuple[Graph, int]]):
        self._terms = {k: v for k, v in sorted(terms.items()) if v[1] != 0}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "SignedGraph":
        return SignedGraph({})

    @staticmethod
    def from_graph(g: Graph) -> "SignedGraph":
        acc: dict[bytes, tuple[Graph, int]] = {}
        for factor, key in additive_factorize(g):
            if key in acc:
                rep, mult = acc[key]
                acc[key] = (rep, mult + 1)
            else:
                acc[key] = (canonical_graph(factor), 1)
        return SignedGraph(acc)

    @staticmethod
    def from_integer(value: int) -> "SignedGraph":
        """Scalar embedding: ``n`` copies of the one-vertex prime."""
        from .graphs import complete

        if value == 0:
            return SignedGraph.zero()
        unit = complete(1)
        return SignedGraph({canonical_key(unit): (unit, value)})

    # -- mapping access ------------------------------------------------

    def terms(self) -> Iterator[tuple[bytes, Graph, int]]:
        """(key, canonical prime, multiplicity), ascending by key."""
        for key, (rep, mult) in self._terms.items():
            yield key, rep, mult

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        if len(self._terms) != len(other._terms):
            return False
        for key, (_, mult) in self._terms.items():
            entry = other._terms.get(key)
            if entry is None or entry[1] != mult:
                return False
        return True

    def __hash__(self) -> int:
        return hash(frozenset((k, v[1]) for k, v in self._terms.items()))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        inner = ", ".join(
            "%s:%+d" % (rep, mult) for _, rep, mult in self.terms()
        )
        return "SignedGraph({%s})" % inner

    # -- group and ring operations --------------------------------------

    def __add__(self, other: "SignedGraph") -> "SignedGraph":
        acc = dict(self._terms)
        for key, (rep, mult) in other._terms.items():
            if key in acc:
                acc[key] = (acc[key][0], acc[key][1] + mult)
            else:
                acc[key] = (rep, mult)
        return SignedGraph(acc)

    def __neg__(self) -> "SignedGraph":
        return SignedGraph({k: (rep, -mult) for k, (rep, mult) in self._terms.items()})

    def __sub__(self, other: "SignedGraph") -> "SignedGraph":
        return self + (-other)

    def __mul__(self, other: "SignedGraph") -> "SignedGraph":
        """Bilinear extension of the Zykov product over the stored primes."""
        acc: dict[bytes, tuple[Graph, int]] = {}
        for ka, a, ma in self.terms():
            for kb, b, mb in other.terms():
                for key, rep, mult in _product_terms(a, ka, b, kb):
                    if key in acc:
                        acc[key] = (acc[key][0], acc[key][1] + ma * mb * mult)
                    else:
                        acc[key] = (rep, ma * mb * mult)
        return SignedGraph(acc)

    # -- functionals -----------------------------------------------------

    def clique_functional(self) -> int:
        """Ring homomorphism to the integers: sum of multiplicity times
        clique number over the stored primes."""
        return sum(mult * clique_number(rep) for _, rep, mult in self.terms())

    def norm(self) -> int:
        """Sum of |multiplicity| times clique number; zero iff zero."""
        return sum(abs(mult) * clique_number(rep) for _, rep, mult in self.terms())

    def distance(self, other: "SignedGraph") -> int:
        return (self - other).norm()

    def semi_inner_product(self, other: "SignedGraph") -> int:
        """Bilinear pairing by clique functionals; its seminorm can vanish
        on nonzero elements."""
        return self.clique_functional() * other.clique_functional()

    def semi_norm(self) -> int:
        return abs(self.clique_functional())

    # -- parts -----------------------------------------------------------

    def positive_part(self) -> Graph:
        """Join of the primes with positive multiplicity (with repetition)."""
        pieces = []
        for _, rep, mult in self.terms():
            if mult > 0:
                pieces.extend([rep] * mult)
        return join_all(pieces)

    def negative_part(self) -> Graph:
        return (-self).positive_part()


def signed_f_function(
    s: SignedGraph, budget: int = DEFAULT_CLIQUE_BUDGET
) -> RationalFunction:
    """f-function of the positive part over that of the negative part,
    kept as an unevaluated rational function (the denominator may vanish
    at ``t = -1``)."""
    num = Polynomial.one()
    den = Polynomial.one()
    for _, rep, mult in s.terms():
        piece = f_function(rep, budget)
        for _ in range(abs(mult)):
            if mult > 0:
                num = num * piece
            else:
                den = den * piece
    return RationalFunction.make(num, den)
