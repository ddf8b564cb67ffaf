"""Canonical labeling and isomorphism testing.

The canonical form is computed in three layers:

* a disconnected graph is reassembled as the disjoint union of the sorted
  canonical forms of its components;
* a graph whose complement is disconnected (a nontrivial join) is
  reassembled as the join of the sorted canonical forms of its additive
  factors;
* a graph that is connected with connected complement goes through
  individualization-refinement: iterative color refinement, backtracking
  over the vertices of the first non-singleton color class, and pruning of
  candidates lying in one orbit of the automorphisms discovered along the
  way.  The leaf whose relabeled adjacency bytes are smallest wins.

Keys are byte strings; two graphs have equal keys iff they are isomorphic.
Everything is deterministic: signatures are sorted, candidates scanned in
ascending vertex order, parts ordered by their packed bytes.
"""

from __future__ import annotations

import sys
from functools import lru_cache

from .graphs import (
    Graph,
    complement,
    connected_components,
    disjoint_union,
    join,
    permute,
)

__all__ = ["canonical_graph", "canonical_key", "is_isomorphic"]


def _pack_bits(bits: list[int]) -> bytearray:
    out = bytearray()
    for k in range(0, len(bits), 8):
        chunk = bits[k : k + 8]
        byte = 0
        for b in chunk:
            byte = (byte << 1) | b
        byte <<= (8 - len(chunk)) % 8
        out.append(byte)
    return out


def _pack(g: Graph) -> bytes:
    """Length-prefixed upper-triangle bits of the labeled adjacency."""
    bits = []
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    return bytes(g.n.to_bytes(4, "big") + _pack_bits(bits))


def _refine(rows: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    """Stable color refinement with isomorphism-invariant color ids.

    Each round replaces a vertex color with the sorted-rank of the pair
    (old color, multiset of neighbor colors); ids therefore depend only on
    the isomorphism type of the colored graph, never on vertex labels.
    """
    while True:
        sigs = []
        for v in range(n):
            counts: dict[int, int] = {}
            m = rows[v]
            while m:
                low = m & -m
                c = colors[low.bit_length() - 1]
                counts[c] = counts.get(c, 0) + 1
                m ^= low
            sigs.append((colors[v], tuple(sorted(counts.items()))))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _leaf_bytes(rows: tuple[int, ...], n: int, position: list[int]) -> bytes:
    """Packed adjacency of the relabeling sending vertex v to position[v]."""
    inv = [0] * n
    for v, p in enumerate(position):
        inv[p] = v
    bits = []
    for j in range(1, n):
        rj = rows[inv[j]]
        for i in range(j):
            bits.append((rj >> inv[i]) & 1)
    return bytes(_pack_bits(bits))


def _orbit_reps(cell: list[int], generators: list[tuple[int, ...]], n: int) -> dict[int, int]:
    """Union-find orbit representative for each cell vertex under the group
    generated by ``generators``."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                parent[b] = a
    return {v: find(v) for v in cell}


def _search_canonical_position(g: Graph) -> list[int]:
    """Individualization-refinement search; returns the winning relabeling
    as a position array (vertex -> canonical index)."""
    n, rows = g.n, g.rows
    base = _refine(rows, n, [0] * n)

    best: dict[str, object] = {"bytes": None, "pos": None}
    first: dict[str, object] = {"bytes": None, "pos": None}
    autos: list[tuple[int, ...]] = []

    def record_leaf(colors: list[int]) -> None:
        pos = list(colors)
        data = _leaf_bytes(rows, n, pos)
        if first["bytes"] is None:
            first["bytes"] = data
            first["pos"] = pos
            best["bytes"] = data
            best["pos"] = pos
            return
        for ref in (first, best):
            if data == ref["bytes"] and pos != ref["pos"]:
                # Equal labeled images: ref_pos^-1 . pos is an automorphism.
                ref_pos = ref["pos"]
                inv_ref = [0] * n
                for v, p in enumerate(ref_pos):  # type: ignore[arg-type]
                    inv_ref[p] = v
                gamma = tuple(inv_ref[pos[v]] for v in range(n))
                if gamma not in autos:
                    autos.append(gamma)
                break
        if data < best["bytes"]:  # type: ignore[operator]
            best["bytes"] = data
            best["pos"] = pos

    def search(colors: list[int], prefix: tuple[int, ...]) -> None:
        distinct = len(set(colors))
        if distinct == n:
            record_leaf(colors)
            return
        # First color class with more than one vertex.
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        cell = [v for v in range(n) if colors[v] == target]
        explored: list[int] = []
        for v in cell:
            if explored and autos:
                applicable = [
                    gen for gen in autos if all(gen[p] == p for p in prefix)
                ]
                if applicable:
                    reps = _orbit_reps(cell, applicable, n)
                    if any(reps[v] == reps[u] for u in explored):
                        continue
            explored.append(v)
            child = list(colors)
            child[v] = -1
            search(_refine(rows, n, child), prefix + (v,))

    limit = sys.getrecursionlimit()
    if n + 100 > limit:
        sys.setrecursionlimit(n + 200)
    try:
        search(base, ())
    finally:
        sys.setrecursionlimit(limit)
    return best["pos"]  # type: ignore[return-value]


@lru_cache(maxsize=100_000)
def canonical_graph(g: Graph) -> Graph:
    """A canonical representative of the isomorphism class of ``g``.

    ``canonical_graph(a) == canonical_graph(b)`` iff ``a`` and ``b`` are
    isomorphic; the result is stable across runs.
    """
    if g.n == 0:
        return g
    comps = connected_components(g)
    if len(comps) > 1:
        parts = sorted((canonical_graph(c) for c in comps), key=_pack)
        out = parts[0]
        for p in parts[1:]:
            out = disjoint_union(out, p)
        return out
    co = complement(g)
    cocomps = connected_components(co)
    if len(cocomps) > 1:
        parts = sorted((canonical_graph(complement(c)) for c in cocomps), key=_pack)
        out = parts[0]
        for p in parts[1:]:
            out = join(out, p)
        return out
    position = _search_canonical_position(g)
    return permute(g, position)


@lru_cache(maxsize=100_000)
def canonical_key(g: Graph) -> bytes:
    """Isomorphism-class fingerprint: packed bytes of the canonical form."""
    return _pack(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via canonical keys, with cheap pre-checks."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.rows == h.rows:
        return True
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_key(g) == canonical_key(h)
