"""Finite simple graphs and the join/product arithmetic on them.

A graph is stored as a vertex count plus one adjacency bitmask per vertex
(bit ``j`` of ``rows[i]`` set iff ``i`` and ``j`` are adjacent).  All values
are immutable and every operation is a pure function, so graphs can be
shared freely between threads.  Vertex identity is positional: the vertices
are always ``0..n-1``, and product vertices ``(a, b)`` are flattened to the
index ``a * |H| + b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .errors import InputError

__all__ = [
    "Graph",
    "zero_graph",
    "complete",
    "edgeless",
    "sphere0",
    "cycle",
    "path",
    "wheel",
    "octahedron",
    "from_edges",
    "normalize",
    "complement",
    "disjoint_union",
    "join",
    "join_all",
    "zykov_product",
    "strong_product",
    "connected_components",
    "is_connected",
    "induced_subgraph",
    "unit_sphere",
    "join_factors",
    "permute",
    "erdos_renyi",
]


def _bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on the vertices ``0..n-1``.

    Invariants: the adjacency is symmetric, the diagonal is zero (no loops)
    and ``n == 0`` encodes the zero graph.  Instances compare and hash by
    their labeled adjacency, not up to isomorphism.
    """

    n: int
    rows: tuple[int, ...]

    def neighbor_mask(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as pairs ``(i, j)`` with ``i < j``, lexicographic."""
        out = []
        for i in range(self.n):
            m = self.rows[i] >> (i + 1)
            while m:
                low = m & -m
                out.append((i, i + 1 + low.bit_length() - 1))
                m ^= low
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "Graph(n=%d, m=%d)" % (self.n, self.edge_count())


# ---------------------------------------------------------------------------
# constructors


def zero_graph() -> Graph:
    """The additive zero: no vertices, no edges."""
    return Graph(0, ())


def complete(n: int) -> Graph:
    if n < 0:
        raise InputError("vertex count must be nonnegative, got %d" % n)
    ones = (1 << n) - 1
    return Graph(n, tuple(ones ^ (1 << i) for i in range(n)))


def edgeless(n: int) -> Graph:
    if n < 0:
        raise InputError("vertex count must be nonnegative, got %d" % n)
    return Graph(n, (0,) * n)


def sphere0() -> Graph:
    """The zero-dimensional sphere: two isolated vertices."""
    return edgeless(2)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices, got %d" % n)
    rows = [0] * n
    for i in range(n):
        j = (i + 1) % n
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def path(n: int) -> Graph:
    if n < 0:
        raise InputError("vertex count must be nonnegative, got %d" % n)
    rows = [0] * n
    for i in range(n - 1):
        rows[i] |= 1 << (i + 1)
        rows[i + 1] |= 1 << i
    return Graph(n, tuple(rows))


def wheel(n: int) -> Graph:
    """Wheel with ``n`` rim vertices: the join of a cycle and one hub."""
    return join(cycle(n), complete(1))


def octahedron() -> Graph:
    return join(join(sphere0(), sphere0()), sphere0())


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``0..n-1`` with the given edges; loops are rejected."""
    if n < 0:
        raise InputError("vertex count must be nonnegative, got %d" % n)
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError("edge (%r, %r) out of range 0..%d" % (u, v, n - 1))
        if u == v:
            raise InputError("loop at vertex %r not allowed" % u)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def normalize(
    vertices: Sequence[Hashable],
    edges: Iterable[tuple[Hashable, Hashable]],
) -> Graph:
    """Build a simple graph from labeled input data.

    Duplicate vertices are merged, self-loops dropped, and duplicate or
    reversed edges collapsed.  Labels are remapped to ``0..n-1`` in order of
    first appearance in ``vertices``.
    """
    index: dict[Hashable, int] = {}
    for label in vertices:
        if label not in index:
            index[label] = len(index)
    rows = [0] * len(index)
    for a, b in edges:
        if a not in index or b not in index:
            missing = a if a not in index else b
            raise InputError("edge endpoint %r is not a declared vertex" % (missing,))
        if a == b:
            continue
        u, v = index[a], index[b]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(len(index), tuple(rows))


# ---------------------------------------------------------------------------
# unary and binary operations


def complement(g: Graph) -> Graph:
    ones = (1 << g.n) - 1
    return Graph(g.n, tuple((ones ^ r ^ (1 << i)) & ones for i, r in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Join: disjoint union plus every cross edge.  The ring addition."""
    ones_g = (1 << g.n) - 1
    hi = ((1 << h.n) - 1) << g.n
    rows = [r | hi for r in g.rows] + [(r << g.n) | ones_g for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def join_all(graphs: Iterable[Graph]) -> Graph:
    """Join of a sequence, left to right; empty sequence gives the zero graph."""
    result = zero_graph()
    for g in graphs:
        result = join(result, g)
    return result


def zykov_product(g: Graph, h: Graph) -> Graph:
    """Product on the vertex set V x W: distinct pairs ``(a, b)``, ``(c, d)``
    are adjacent iff ``a ~ c`` or ``b ~ d``.  The ring multiplication."""
    ng, nh = g.n, h.n
    ones_h = (1 << nh) - 1
    # Union of full h-blocks over the g-neighbors of a.
    spread = []
    for a in range(ng):
        acc = 0
        m = g.rows[a]
        while m:
            low = m & -m
            acc |= ones_h << ((low.bit_length() - 1) * nh)
            m ^= low
        spread.append(acc)
    # h.rows[b] replicated into every block; no carries since rows fit a block.
    replicate = 0
    for c in range(ng):
        replicate |= 1 << (c * nh)
    rows = []
    for a in range(ng):
        sa = spread[a]
        for b in range(nh):
            rows.append(sa | replicate * h.rows[b])
    return Graph(ng * nh, tuple(rows))


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product, realized through complement duality with the Zykov
    product; the vertex flattening matches ``zykov_product`` exactly."""
    return complement(zykov_product(complement(g), complement(h)))


# ---------------------------------------------------------------------------
# structure


def _component_masks(g: Graph) -> list[int]:
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        comp = unseen & -unseen
        frontier = comp
        while frontier:
            reach = 0
            m = frontier
            while m:
                low = m & -m
                reach |= g.rows[low.bit_length() - 1]
                m ^= low
            frontier = reach & unseen & ~comp
            comp |= frontier
        comps.append(comp)
        unseen &= ~comp
    return comps


def connected_components(g: Graph) -> list[Graph]:
    """Components as normalized graphs, ordered by smallest original vertex."""
    return [induced_subgraph(g, _bits(mask)) for mask in _component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True for the zero graph and any graph with a single component."""
    return len(_component_masks(g)) <= 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    sel = sorted(set(vertices))
    for v in sel:
        if not 0 <= v < g.n:
            raise InputError("vertex %d out of range 0..%d" % (v, g.n - 1))
    pos = {v: i for i, v in enumerate(sel)}
    rows = [0] * len(sel)
    for i, v in enumerate(sel):
        m = g.rows[v]
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            j = pos.get(u)
            if j is not None:
                rows[i] |= 1 << j
    return Graph(len(sel), tuple(rows))


def unit_sphere(g: Graph, v: int) -> Graph:
    """Induced subgraph on the neighbors of ``v``."""
    if not 0 <= v < g.n:
        raise InputError("vertex %d out of range 0..%d" % (v, g.n - 1))
    return induced_subgraph(g, g.neighbors(v))


def join_factors(g: Graph) -> list[Graph]:
    """Additive factorization: complements of the complement's components.

    Joining the returned factors in order reproduces a graph isomorphic to
    ``g``; each factor has a connected complement.  The zero graph factors
    into the empty list.
    """
    return [complement(c) for c in connected_components(complement(g))]


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel: vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InputError("perm is not a permutation of 0..%d" % (g.n - 1))
    rows = [0] * g.n
    for i, j in g.edges():
        a, b = perm[i], perm[j]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# random graphs

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int):
    """SplitMix64 stream; 64-bit outputs, fully determined by the seed."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def erdos_renyi(n: int, p, seed: int) -> Graph:
    """Erdos-Renyi graph with exact edge probability ``p``.

    Each of the ``n(n-1)/2`` candidate edges, taken in lexicographic order
    ``(0,1), (0,2), ..., (n-2,n-1)`` over pairs ``i < j`` ordered by ``i``
    then ``j``, is included iff the next SplitMix64 draw is below
    ``floor(p * 2**64)``.  Identical across platforms and runs.
    """
    if n < 0:
        raise InputError("vertex count must be nonnegative, got %d" % n)
    prob = Fraction(p)
    if not 0 <= prob <= 1:
        raise InputError("edge probability %s outside [0, 1]" % prob)
    threshold = (prob.numerator << 64) // prob.denominator
    stream = splitmix64(seed)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if next(stream) < threshold:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))
