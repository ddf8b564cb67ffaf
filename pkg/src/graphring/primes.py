"""Additive and multiplicative primality, factor search, and the exhaustive
catalog of small graphs up to isomorphism.

Additive primality is complement connectivity.  Multiplicative factor search
is exhaustive over the catalog orders dividing the vertex count, pruned by
the multiplicativity of the clique number; it reports every factor pair it
finds, since multiplicative factorization is not unique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import canonical_graph, canonical_key
from .errors import InputError, ResourceBudgetError
from .graphs import Graph, complement, is_connected, zero_graph, zykov_product
from .invariants import clique_number

__all__ = [
    "MAX_CATALOG_ORDER",
    "is_additive_prime",
    "graphs_of_order",
    "all_graphs_up_to",
    "multiplicative_factorizations",
    "MultiplicativeVerdict",
    "is_multiplicative_prime",
]

MAX_CATALOG_ORDER = 8


def is_additive_prime(g: Graph) -> bool:
    """A graph is an additive prime iff its complement is connected.
    Undefined (an error) for the zero graph."""
    if g.n == 0:
        raise InputError("additive primality is undefined for the zero graph")
    return is_connected(complement(g))


_CATALOG: dict[int, list[Graph]] = {0: [zero_graph()]}


def graphs_of_order(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of order ``n``.

    Built incrementally: every class of order ``n`` arises from a class of
    order ``n - 1`` by adding one vertex with some neighborhood, so the
    extensions are enumerated and deduplicated by canonical key.  Sorted by
    key, hence stable across runs.
    """
    if n < 0:
        raise InputError("order must be nonnegative, got %d" % n)
    if n > MAX_CATALOG_ORDER:
        raise ResourceBudgetError(
            "catalog restricted to order <= %d, got %d" % (MAX_CATALOG_ORDER, n)
        )
    cached = _CATALOG.get(n)
    if cached is not None:
        return cached
    seen: dict[bytes, Graph] = {}
    for base in graphs_of_order(n - 1):
        for neighborhood in range(1 << (n - 1)):
            rows = [r | ((neighborhood >> i & 1) << (n - 1)) for i, r in enumerate(base.rows)]
            rows.append(neighborhood)
            candidate = Graph(n, tuple(rows))
            key = canonical_key(candidate)
            if key not in seen:
                seen[key] = canonical_graph(candidate)
    result = [seen[k] for k in sorted(seen)]
    _CATALOG[n] = result
    return result


def all_graphs_up_to(n: int) -> list[Graph]:
    """Catalog representatives of every order ``0..n`` (zero graph first)."""
    out: list[Graph] = []
    for k in range(n + 1):
        out.extend(graphs_of_order(k))
    return out


def _factor_search(
    g: Graph, max_factor_order: int
) -> tuple[list[tuple[Graph, Graph]], list[int]]:
    """Searchable splits fully explored; returns (pairs, skipped orders)."""
    n = g.n
    target_key = canonical_key(g)
    target_clique = clique_number(g)
    found: dict[tuple[bytes, bytes], tuple[Graph, Graph]] = {}
    skipped: list[int] = []
    for d in range(2, n + 1):
        if d * d > n:
            break
        if n % d:
            continue
        other = n // d
        if other > max_factor_order:
            skipped.append(other)
            continue
        for a in graphs_of_order(d):
            ca = clique_number(a)
            for b in graphs_of_order(other):
                if ca * clique_number(b) != target_clique:
                    continue
                if canonical_key(zykov_product(a, b)) != target_key:
                    continue
                ka, kb = canonical_key(a), canonical_key(b)
                if kb < ka:
                    pair_key, pair = (kb, ka), (b, a)
                else:
                    pair_key, pair = (ka, kb), (a, b)
                found.setdefault(pair_key, pair)
    return [found[k] for k in sorted(found)], skipped


def multiplicative_factorizations(
    g: Graph, max_factor_order: int = MAX_CATALOG_ORDER
) -> list[tuple[Graph, Graph]]:
    """All pairs ``(a, b)`` of nontrivial graphs with ``a * b`` isomorphic to
    ``g``, searched exhaustively over catalog orders that split ``|V(g)|``.

    Candidate pairs are pruned by ``c(a) * c(b) == c(g)``.  An empty result
    means ``g`` is multiplicatively prime relative to the searched space.
    If some split would need a catalog order above ``max_factor_order``, the
    remaining splits are still searched and a resource error is raised at
    the end: the search is inconclusive rather than exhaustive.
    """
    if g.n == 0:
        raise InputError("multiplicative factorization is undefined for the zero graph")
    pairs, skipped = _factor_search(g, max_factor_order)
    if skipped:
        raise ResourceBudgetError(
            "factor orders %s exceed the catalog budget %d; search inconclusive "
            "(%d pair(s) found in the searched splits)"
            % (sorted(set(skipped)), max_factor_order, len(pairs))
        )
    return pairs


@dataclass(frozen=True)
class MultiplicativeVerdict:
    """Three-valued primality verdict with the witnesses that produced it."""

    status: str  # "prime" | "composite" | "inconclusive"
    is_unit: bool
    factor_pairs: tuple[tuple[Graph, Graph], ...]


def is_multiplicative_prime(
    g: Graph, max_factor_order: int = MAX_CATALOG_ORDER
) -> MultiplicativeVerdict:
    """Wrapper over the factor search.  ``K1`` is the multiplicative unit and
    reports as prime with the unit flag set; a budget overflow with no factor
    found maps to ``inconclusive``."""
    if g.n == 0:
        raise InputError("multiplicative primality is undefined for the zero graph")
    if g.n == 1:
        return MultiplicativeVerdict("prime", True, ())
    pairs, skipped = _factor_search(g, max_factor_order)
    if pairs:
        return MultiplicativeVerdict("composite", False, tuple(pairs))
    if skipped:
        return MultiplicativeVerdict("inconclusive", False, ())
    return MultiplicativeVerdict("prime", False, ())
