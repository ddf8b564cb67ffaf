from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphring import (
    InputError,
    complement,
    complete,
    connected_components,
    cycle,
    disjoint_union,
    edgeless,
    erdos_renyi,
    from_edges,
    induced_subgraph,
    is_connected,
    join,
    join_factors,
    join_all,
    normalize,
    octahedron,
    path,
    permute,
    sphere0,
    strong_product,
    unit_sphere,
    wheel,
    zero_graph,
    zykov_product,
)
from graphring.graphs import splitmix64

from oracles import (
    naive_complement,
    naive_join,
    naive_strong_product,
    naive_zykov_product,
    splitmix64_reference,
)


def graphs_strategy(max_n=6):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return from_edges(n, [p for p, keep in zip(pairs, flags) if keep])

    return build()


def assert_simple(g):
    for i in range(g.n):
        assert not g.has_edge(i, i)
        for j in range(g.n):
            assert g.has_edge(i, j) == g.has_edge(j, i)
    assert g.rows == tuple(g.rows)


class TestNormalize:
    def test_dedupes_vertices_loops_and_reversed_edges(self):
        g = normalize(["a", "b", "a"], [("a", "b"), ("b", "a"), ("a", "a")])
        assert g.n == 2
        assert g.edge_count() == 1

    def test_empty_input_gives_zero_graph(self):
        assert normalize([], []) == zero_graph()

    def test_path_from_labels(self):
        g = normalize(["x", "y", "z"], [("x", "y"), ("y", "z")])
        assert g == path(3)

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(InputError):
            normalize(["a"], [("a", "b")])

    def test_label_order_is_first_appearance(self):
        g = normalize([3, 1, 2], [(3, 1)])
        assert g.has_edge(0, 1)
        assert not g.has_edge(0, 2)


class TestBuilders:
    def test_complete(self):
        k4 = complete(4)
        assert k4.edge_count() == 6
        assert all(k4.degree(v) == 3 for v in range(4))

    def test_cycle_requires_three(self):
        with pytest.raises(InputError):
            cycle(2)

    def test_wheel_is_cycle_plus_hub(self):
        w = wheel(5)
        assert w.n == 6
        assert w.degree(5) == 5

    def test_octahedron_counts(self):
        o = octahedron()
        assert (o.n, o.edge_count()) == (6, 12)

    def test_negative_counts_rejected(self):
        for builder in (complete, edgeless, path):
            with pytest.raises(InputError):
                builder(-1)


class TestComplement:
    def test_complete_to_edgeless(self):
        assert complement(complete(5)) == edgeless(5)

    def test_c4_complement_is_two_disjoint_edges(self):
        # Direct enumeration: each C4 vertex misses exactly its antipode.
        got = complement(cycle(4))
        assert sorted(got.edges()) == [(0, 2), (1, 3)]

    def test_zero_graph(self):
        assert complement(zero_graph()) == zero_graph()

    @given(graphs_strategy())
    @settings(max_examples=60, deadline=None)
    def test_involution_and_oracle(self, g):
        assert complement(complement(g)) == g
        assert complement(g) == naive_complement(g)


class TestBinaryOperations:
    def test_join_of_spheres_is_c4(self):
        got = join(sphere0(), sphere0())
        assert got.edge_count() == 4
        assert sorted(got.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_join_of_completes(self):
        assert join(complete(2), complete(3)) == complete(5)

    def test_triple_join_is_octahedron(self):
        got = join_all([sphere0(), sphere0(), sphere0()])
        assert (got.n, got.edge_count()) == (6, 12)

    def test_disjoint_union_adds_without_cross_edges(self):
        got = disjoint_union(complete(1), complete(1))
        assert got == edgeless(2)

    def test_product_of_spheres_is_edgeless_four(self):
        assert zykov_product(sphere0(), sphere0()) == edgeless(4)

    def test_product_unit(self):
        g = cycle(5)
        assert zykov_product(g, complete(1)) == g
        assert join(g, zero_graph()) == g

    def test_strong_product_matches_complement_route(self):
        a, b = cycle(4), complete(2)
        assert strong_product(a, b) == complement(
            zykov_product(complement(a), complement(b))
        )

    def test_strong_product_of_spheres(self):
        # complement(K2 * K2) = complement(K4) = E4
        assert strong_product(sphere0(), sphere0()) == edgeless(4)
        assert strong_product(complete(2), complete(2)) == complete(4)

    @given(graphs_strategy(4), graphs_strategy(4))
    @settings(max_examples=40, deadline=None)
    def test_operations_match_naive_oracles(self, g, h):
        assert join(g, h) == naive_join(g, h)
        assert zykov_product(g, h) == naive_zykov_product(g, h)
        assert strong_product(g, h) == naive_strong_product(g, h)
        assert_simple(join(g, h))
        assert_simple(zykov_product(g, h))


class TestStructure:
    def test_components_of_edgeless(self):
        comps = connected_components(edgeless(3))
        assert comps == [complete(1)] * 3

    def test_cycle_is_one_component(self):
        assert connected_components(cycle(5)) == [cycle(5)]

    def test_component_order_by_smallest_vertex(self):
        g = disjoint_union(complete(2), complete(3))
        comps = connected_components(g)
        assert [c.n for c in comps] == [2, 3]

    def test_is_connected(self):
        assert is_connected(zero_graph())
        assert is_connected(complete(1))
        assert not is_connected(edgeless(2))

    def test_induced_subgraph(self):
        assert induced_subgraph(cycle(4), [0, 1]) == complete(2)
        assert induced_subgraph(cycle(4), [0, 2]) == edgeless(2)
        assert induced_subgraph(complete(5), [1, 2, 4]) == complete(3)
        assert induced_subgraph(cycle(4), []) == zero_graph()

    def test_induced_subgraph_range_check(self):
        with pytest.raises(InputError):
            induced_subgraph(cycle(4), [0, 7])

    def test_unit_spheres(self):
        o = octahedron()
        for v in range(o.n):
            sphere = unit_sphere(o, v)
            assert (sphere.n, sphere.edge_count(), sphere.degree_sequence()) == (
                4,
                4,
                (2, 2, 2, 2),
            )
        assert unit_sphere(complete(5), 2) == complete(4)
        assert unit_sphere(edgeless(4), 1) == zero_graph()
        with pytest.raises(InputError):
            unit_sphere(cycle(4), 4)

    def test_unit_sphere_join_rule(self):
        g, h = cycle(5), complete(2)
        joined = join(g, h)
        for x in range(g.n):
            lhs = unit_sphere(joined, x)
            rhs = join(unit_sphere(g, x), h)
            assert lhs.degree_sequence() == rhs.degree_sequence()
            assert lhs.edge_count() == rhs.edge_count()

    def test_join_factors_recombine(self):
        g = join(cycle(5), sphere0())
        factors = join_factors(g)
        assert sorted(f.n for f in factors) == [2, 5]
        rebuilt = join_all(factors)
        assert rebuilt.degree_sequence() == g.degree_sequence()

    def test_permute_relabels(self):
        g = path(3)
        assert permute(g, [2, 1, 0]).edges() == [(0, 1), (1, 2)]
        with pytest.raises(InputError):
            permute(g, [0, 0, 1])


class TestErdosRenyi:
    def test_probability_extremes(self):
        assert erdos_renyi(5, 0, 1) == edgeless(5)
        assert erdos_renyi(5, 1, 1) == complete(5)

    def test_determinism(self):
        assert erdos_renyi(8, Fraction(1, 2), 42) == erdos_renyi(8, Fraction(1, 2), 42)

    def test_probability_validated(self):
        with pytest.raises(InputError):
            erdos_renyi(4, Fraction(3, 2), 0)
        with pytest.raises(InputError):
            erdos_renyi(-1, Fraction(1, 2), 0)

    def test_splitmix_matches_reference(self):
        stream = splitmix64(12345)
        assert [next(stream) for _ in range(5)] == splitmix64_reference(12345, 5)

    def test_splitmix_known_vector(self):
        # First output for seed 0, as published for SplitMix64.
        assert splitmix64_reference(0, 1)[0] == 0xE220A8397B1DCDAF

    def test_pinned_edge_set(self):
        # Frozen once from the pinned generator + lexicographic edge order;
        # guards against accidental reordering or generator drift.
        g = erdos_renyi(6, Fraction(1, 2), 7)
        assert g.edges() == [
            (0, 1), (0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4),
        ]
        assert g == erdos_renyi(6, 0.5, 7)
