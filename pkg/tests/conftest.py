import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphring import (
    Graph,
    complete,
    cycle,
    edgeless,
    erdos_renyi,
    octahedron,
    path,
    sphere0,
    wheel,
    zero_graph,
)
from graphring.graphs import splitmix64


def er_triples(seed: int, count: int, max_n: int = 8):
    """Seeded Erdos-Renyi triples with p cycling over 0.3/0.5/0.7."""
    probabilities = [Fraction(3, 10), Fraction(1, 2), Fraction(7, 10)]
    stream = splitmix64(seed)
    out = []
    for k in range(count):
        p = probabilities[k % 3]
        sizes = [1 + next(stream) % max_n for _ in range(3)]
        seeds = [next(stream) for _ in range(3)]
        out.append(tuple(erdos_renyi(n, p, s) for n, s in zip(sizes, seeds)))
    return out


@pytest.fixture(scope="session")
def named_graphs() -> dict[str, Graph]:
    return {
        "zero": zero_graph(),
        "K1": complete(1),
        "K2": complete(2),
        "K3": complete(3),
        "K5": complete(5),
        "E2": sphere0(),
        "E3": edgeless(3),
        "E4": edgeless(4),
        "C4": cycle(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "P3": path(3),
        "W5": wheel(5),
        "oct": octahedron(),
    }


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """Mixed bag of named and random graphs with at most 8 vertices."""
    graphs = [
        zero_graph(),
        complete(1),
        complete(2),
        complete(4),
        edgeless(2),
        edgeless(5),
        cycle(4),
        cycle(5),
        cycle(6),
        cycle(7),
        path(4),
        wheel(5),
        octahedron(),
    ]
    for a, b, c in er_triples(20260810, 12):
        graphs.extend([a, b, c])
    return graphs
