from fractions import Fraction

import pytest

from graphring import (
    InputError,
    Polynomial,
    RationalFunction,
    ResourceBudgetError,
    clique_number,
    complete,
    cycle,
    ds_member,
    edgeless,
    erdos_renyi,
    euler_characteristic,
    f_function,
    f_vector,
    genus,
    join,
    join_all,
    octahedron,
    sphere0,
    unit_sphere,
    zero_graph,
    zykov_product,
)
from graphring.graphs import splitmix64

from oracles import brute_clique_counts, brute_clique_number


class TestCliqueNumber:
    def test_cycles_have_clique_two(self):
        for n in range(4, 11):
            assert clique_number(cycle(n)) == 2

    def test_triangle_is_complete(self):
        assert clique_number(cycle(3)) == 3

    def test_complete_graphs(self):
        for n in range(9):
            assert clique_number(complete(n)) == n

    def test_octahedron_via_additivity(self):
        # Three join factors of clique number 1 each.
        assert clique_number(octahedron()) == 3

    def test_zero_graph(self):
        assert clique_number(zero_graph()) == 0

    def test_matches_subset_oracle_on_random_graphs(self):
        stream = splitmix64(314159)
        for trial in range(60):
            n = next(stream) % 11
            g = erdos_renyi(n, Fraction(next(stream) % 9 + 1, 10), next(stream))
            assert clique_number(g) == brute_clique_number(g)

    def test_matches_subset_oracle_on_sixteen_vertex_joins(self):
        stream = splitmix64(2718)
        for _ in range(4):
            a = erdos_renyi(8, Fraction(1, 2), next(stream))
            b = erdos_renyi(8, Fraction(1, 2), next(stream))
            g = join(a, b)
            assert g.n == 16
            assert clique_number(g) == brute_clique_number(g)

    def test_additive_and_multiplicative(self):
        stream = splitmix64(55)
        for _ in range(15):
            a = erdos_renyi(1 + next(stream) % 6, Fraction(1, 2), next(stream))
            b = erdos_renyi(1 + next(stream) % 6, Fraction(1, 2), next(stream))
            assert clique_number(join(a, b)) == clique_number(a) + clique_number(b)
            assert clique_number(zykov_product(a, b)) == clique_number(a) * clique_number(b)


class TestFVector:
    def test_k3(self):
        assert f_vector(complete(3)) == (3, 3, 1)

    def test_c4(self):
        assert f_vector(cycle(4)) == (4, 4)

    def test_edgeless(self):
        assert f_vector(edgeless(7)) == (7,)
        assert f_vector(zero_graph()) == ()

    def test_length_is_clique_number_and_f0_is_order(self):
        stream = splitmix64(808)
        for _ in range(20):
            g = erdos_renyi(next(stream) % 9, Fraction(1, 2), next(stream))
            fv = f_vector(g)
            assert len(fv) == clique_number(g)
            if g.n:
                assert fv[0] == g.n

    def test_matches_combinations_oracle(self):
        stream = splitmix64(909)
        for _ in range(15):
            g = erdos_renyi(next(stream) % 8, Fraction(3, 5), next(stream))
            assert list(f_vector(g)) == brute_clique_counts(g)

    def test_budget_guard(self):
        with pytest.raises(ResourceBudgetError):
            f_vector(complete(30))
        with pytest.raises(ResourceBudgetError):
            f_vector(complete(12), budget=100)


class TestFFunction:
    def test_sphere(self):
        assert f_function(sphere0()) == Polynomial.make([1, 2])

    def test_complete_is_binomial(self):
        for n in range(7):
            expected = Polynomial.one()
            for _ in range(n):
                expected = expected * Polynomial.make([1, 1])
            assert f_function(complete(n)) == expected

    def test_zero_graph(self):
        assert f_function(zero_graph()) == Polynomial.one()

    def test_multiplicative_over_join(self):
        stream = splitmix64(617)
        for _ in range(12):
            a = erdos_renyi(next(stream) % 7, Fraction(1, 2), next(stream))
            b = erdos_renyi(next(stream) % 7, Fraction(1, 2), next(stream))
            assert f_function(join(a, b)) == f_function(a) * f_function(b)


class TestEulerCharacteristic:
    def test_sphere_values(self):
        assert euler_characteristic(sphere0()) == 2
        assert euler_characteristic(edgeless(4)) == 4
        assert euler_characteristic(cycle(4)) == 0
        assert euler_characteristic(octahedron()) == 2

    def test_agrees_with_alternating_sum(self):
        stream = splitmix64(727)
        for _ in range(20):
            g = erdos_renyi(next(stream) % 9, Fraction(1, 2), next(stream))
            alternating = sum((-1) ** k * f for k, f in enumerate(f_vector(g)))
            assert euler_characteristic(g) == alternating
            assert euler_characteristic(g) == 1 - f_function(g)(-1)

    def test_large_join_stays_cheap(self):
        # 3**30 - 1 cliques, far over any enumeration budget, but the
        # factorized evaluation never counts them.
        g = join_all([sphere0()] * 30)
        assert euler_characteristic(g) == 0

    def test_genus(self):
        assert genus(sphere0()) == -1
        assert genus(complete(6)) == 0
        assert genus(cycle(4)) == 1

    def test_genus_multiplicative_over_join(self):
        stream = splitmix64(737)
        for _ in range(15):
            a = erdos_renyi(next(stream) % 8, Fraction(1, 2), next(stream))
            b = erdos_renyi(next(stream) % 8, Fraction(1, 2), next(stream))
            assert genus(join(a, b)) == genus(a) * genus(b)


class TestDsMember:
    def test_dimension_minus_one_is_zero_graph_only(self):
        assert ds_member(zero_graph(), -1)
        assert not ds_member(complete(1), -1)

    def test_sphere_chain(self):
        assert ds_member(sphere0(), 0)
        assert ds_member(cycle(4), 1)
        assert ds_member(octahedron(), 2)

    def test_non_members(self):
        assert not ds_member(complete(3), 0)
        assert not ds_member(complete(3), 1)
        assert not ds_member(zero_graph(), 0)
        assert not ds_member(sphere0(), 1)

    def test_cycles_are_one_dimensional_members(self):
        for n in range(4, 9):
            assert ds_member(cycle(n), 1)

    def test_closure_under_join(self):
        members = {0: [sphere0()], 1: [cycle(4), cycle(5), cycle(6)]}
        for da, graphs_a in members.items():
            for db, graphs_b in members.items():
                for a in graphs_a:
                    for b in graphs_b:
                        assert ds_member(join(a, b), da + db + 1)

    def test_dimension_validated(self):
        with pytest.raises(InputError):
            ds_member(sphere0(), -2)


class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial.make([1, 2, 0, 0]) == Polynomial.make([1, 2])

    def test_arithmetic(self):
        p = Polynomial.make([1, 1])
        q = Polynomial.make([1, 2])
        assert p * q == Polynomial.make([1, 3, 2])
        assert p + q == Polynomial.make([2, 3])
        assert (-p) + p == Polynomial.make([])

    def test_exact_evaluation(self):
        p = Polynomial.make([1, 2, 3])
        assert p(-1) == 2
        assert p(Fraction(1, 2)) == Fraction(11, 4)

    def test_str(self):
        assert str(Polynomial.make([1, 2])) == "1 + 2*t"
        assert str(Polynomial.make([0, 1, -1])) == "t - t^2"
        assert str(Polynomial.make([])) == "0"


class TestRationalFunction:
    def test_cross_multiplied_equality(self):
        p = Polynomial.make([1, 1])
        q = Polynomial.make([1, 2])
        a = RationalFunction.make(p * q, p)
        b = RationalFunction.make(q, Polynomial.one())
        assert a == b

    def test_content_reduction_and_sign(self):
        a = RationalFunction.make(Polynomial.make([2, 4]), Polynomial.make([-2]))
        assert a.denominator.coeffs[-1] > 0
        assert a == RationalFunction.make(Polynomial.make([-1, -2]), Polynomial.one())

    def test_zero_denominator_rejected(self):
        with pytest.raises(InputError):
            RationalFunction.make(Polynomial.one(), Polynomial.make([]))


def test_sphere_of_octahedron_is_one_dimensional_member():
    sphere = unit_sphere(octahedron(), 0)
    assert ds_member(sphere, 1)
