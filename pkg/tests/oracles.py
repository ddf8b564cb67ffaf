"""Independent brute-force oracles used to pin expected values.

Everything here deliberately avoids the library's algorithms: cliques by
subset dynamic programming or combinations, isomorphism by permutation
search, graph operations on explicit edge sets, class counts by orbit
counting over the symmetric group.
"""

from __future__ import annotations

import itertools
from math import factorial

from graphring import Graph, from_edges


# ---------------------------------------------------------------------------
# cliques


def brute_clique_number(g: Graph) -> int:
    """Largest clique via subset DP: a set is a clique iff removing its
    lowest vertex leaves a clique lying inside that vertex's neighborhood."""
    n = g.n
    if n == 0:
        return 0
    is_clique = bytearray(1 << n)
    is_clique[0] = 1
    best = 0
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        if is_clique[rest] and rest & ~g.rows[v] == 0:
            is_clique[s] = 1
            size = s.bit_count()
            if size > best:
                best = size
    return best


def brute_clique_counts(g: Graph) -> list[int]:
    """Number of (k+1)-cliques for each k, by checking all combinations."""
    counts = []
    k = 1
    while True:
        total = 0
        for combo in itertools.combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                total += 1
        if total == 0:
            break
        counts.append(total)
        k += 1
    return counts


# ---------------------------------------------------------------------------
# isomorphism


def brute_is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    ge = set(g.edges())
    for perm in itertools.permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in ge):
            return True
    return False


def brute_canonical_bytes(g: Graph) -> bytes:
    """Minimum packed upper-triangle adjacency over all relabelings."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        bits = []
        inv = [0] * g.n
        for v, p in enumerate(perm):
            inv[p] = v
        for j in range(1, g.n):
            for i in range(j):
                bits.append(1 if g.has_edge(inv[i], inv[j]) else 0)
        data = bytes(bits)
        if best is None or data < best:
            best = data
    return b"" if best is None else best


# ---------------------------------------------------------------------------
# operations on explicit edge sets


def naive_complement(g: Graph) -> Graph:
    edges = [
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if not g.has_edge(i, j)
    ]
    return from_edges(g.n, edges)


def naive_join(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges())
    edges += [(i + g.n, j + g.n) for i, j in h.edges()]
    edges += [(i, j + g.n) for i in range(g.n) for j in range(h.n)]
    return from_edges(g.n + h.n, edges)


def naive_zykov_product(g: Graph, h: Graph) -> Graph:
    def flat(a: int, b: int) -> int:
        return a * h.n + b

    edges = []
    for a in range(g.n):
        for b in range(h.n):
            for c in range(g.n):
                for d in range(h.n):
                    if (a, b) >= (c, d):
                        continue
                    if g.has_edge(a, c) or h.has_edge(b, d):
                        edges.append((flat(a, b), flat(c, d)))
    return from_edges(g.n * h.n, edges)


def naive_strong_product(g: Graph, h: Graph) -> Graph:
    """Textbook strong product: adjacency-or-equality in each coordinate."""

    def flat(a: int, b: int) -> int:
        return a * h.n + b

    edges = []
    for a in range(g.n):
        for b in range(h.n):
            for c in range(g.n):
                for d in range(h.n):
                    if (a, b) >= (c, d):
                        continue
                    ok_g = a == c or g.has_edge(a, c)
                    ok_h = b == d or h.has_edge(b, d)
                    if ok_g and ok_h:
                        edges.append((flat(a, b), flat(c, d)))
    return from_edges(g.n * h.n, edges)


def connected_by_union_find(g: Graph) -> bool:
    if g.n == 0:
        return True
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        parent[find(u)] = find(v)
    return len({find(v) for v in range(g.n)}) == 1


# ---------------------------------------------------------------------------
# counting isomorphism classes without canonical forms


def orbit_count_of_graphs(n: int) -> int:
    """Number of graphs on ``n`` unlabeled vertices, by Burnside's lemma:
    average over all permutations of 2**(orbits on vertex pairs)."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = [False] * len(pairs)
        orbits = 0
        for start in range(len(pairs)):
            if seen[start]:
                continue
            orbits += 1
            cur = start
            while not seen[cur]:
                seen[cur] = True
                a, b = pairs[cur]
                image = (perm[a], perm[b])
                cur = index[(min(image), max(image))]
        total += 1 << orbits
    return total // factorial(n)


# ---------------------------------------------------------------------------
# random generator reference


def splitmix64_reference(seed: int, count: int) -> list[int]:
    mask = (1 << 64) - 1
    state = seed & mask
    out = []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z ^= z >> 30
        z = (z * 0xBF58476D1CE4E5B9) & mask
        z ^= z >> 27
        z = (z * 0x94D049BB133111EB) & mask
        z ^= z >> 31
        out.append(z)
    return out
