import math
import random

import numpy as np
import pytest
from conftest import random_dag, random_rates_for_shape

from tabloidsched import (
    CapacityError,
    Functional,
    InvalidArgumentError,
    KVector,
    ParseError,
    Partition,
    Permutation,
    ProcessorSystem,
    SingularMatrixError,
    TaskGraph,
    act,
    act_on_tabloid,
    apply_matrix,
    basis_keys,
    character,
    character_table,
    compose,
    decode,
    dimension,
    dual_transform,
    enumerate_standard_tabloids,
    inner_product,
    inverse,
    k_copies_totals,
    pair,
    parse_functional,
    parse_permutation,
    parse_vector,
    partitions_of,
    turnaround_functional,
)
from tabloidsched.vectorspace import format_vector, permutation_matrix, relative_determinant

CHARS_N4 = [
    [24, 0, 0, 0, 0],
    [12, 2, 0, 0, 0],
    [6, 2, 2, 0, 0],
    [4, 2, 0, 1, 0],
    [1, 1, 1, 1, 1],
]


def rand_perm(rng, n):
    return Permutation(tuple(rng.sample(range(1, n + 1), n)))


def rand_vector(rng, shape, cls=KVector, support=4):
    keys = basis_keys(shape)
    chosen = rng.sample(keys, min(support, len(keys)))
    return cls(shape, {k: rng.randint(-5, 5) + rng.random() for k in chosen})


class TestDimension:
    def test_examples(self):
        assert dimension((2, 2)) == 6
        assert dimension((4,)) == 1
        assert dimension((2, 1, 1)) == 12

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_enumeration(self, n):
        for shape in partitions_of(n):
            assert dimension(shape) == len(enumerate_standard_tabloids(shape)) == len(basis_keys(shape))


class TestVectors:
    def test_keys_canonicalised_and_merged(self):
        v = KVector((2, 2), {"Y2,1,3,4": 1, "Y1,2,4,3": 2})
        assert v.coeffs == {"Y1,2,3,4": 3.0}

    def test_invalid_key(self):
        with pytest.raises(InvalidArgumentError):
            KVector((2, 2), {"Y1,2,3": 1})
        with pytest.raises(InvalidArgumentError):
            KVector((2, 2), {"y1,2,3,4": 1})

    def test_arithmetic(self):
        u = KVector((2, 1), {"Y1,2,3": 1})
        v = KVector((2, 1), {"Y1,3,2": 2})
        assert (u + v).coeffs == {"Y1,2,3": 1.0, "Y1,3,2": 2.0}
        assert (u - u).coeffs == {}
        assert (3 * v).coeffs == {"Y1,3,2": 6.0}
        with pytest.raises(InvalidArgumentError):
            u + KVector((3,), {"Y1,2,3": 1})

    def test_array_round_trip(self):
        rng = random.Random(1)
        v = rand_vector(rng, (3, 2))
        assert KVector.from_array((3, 2), v.to_array()) == v

    def test_text(self):
        v = parse_vector("1*Y1,2,3,4 + 2*Y1,3,2,4", (2, 2))
        assert v.coeffs == {"Y1,2,3,4": 1.0, "Y1,3,2,4": 2.0}
        assert parse_vector(" Y1,3,2,4+Y1,2,3,4 ", (2, 2)).coeffs == {"Y1,2,3,4": 1.0, "Y1,3,2,4": 1.0}
        assert parse_vector("-1.5 * Y1,2,3,4 + 2e+1*Y3,4,1,2", (2, 2)).coeffs == {"Y1,2,3,4": -1.5, "Y3,4,1,2": 20.0}
        assert format_vector(v) == "1*Y1,2,3,4 + 2*Y1,3,2,4"
        with pytest.raises(ParseError):
            parse_vector("2*Y1,2,3", (2, 2))
        with pytest.raises(ParseError):
            parse_vector("2 Y1,2,3,4", (2, 2))


class TestAction:
    def test_examples(self):
        t = parse_permutation("(1 2)", 3)
        assert act(t, KVector.basis((2, 1), "Y1,2,3")) == KVector.basis((2, 1), "Y1,2,3")
        assert act(t, KVector.basis((2, 1), "Y1,3,2")) == KVector.basis((2, 1), "Y2,3,1")
        rng = random.Random(2)
        v = rand_vector(rng, (3, 1))
        assert act(Permutation.identity(4), v) == v
        with pytest.raises(InvalidArgumentError):
            act(Permutation.identity(3), v)

    def test_swap_on_three_one(self):
        g = parse_permutation("(1 2)", 4)
        assert act(g, KVector.basis((3, 1), "Y1,2,3,4")) == KVector.basis((3, 1), "Y1,2,3,4")
        assert act(g, KVector.basis((3, 1), "Y1,2,4,3")) == KVector.basis((3, 1), "Y1,2,4,3")
        assert act(g, KVector.basis((3, 1), "Y1,3,4,2")) == KVector.basis((3, 1), "Y2,3,4,1")

    def test_linearity_and_composition(self):
        rng = random.Random(3)
        for _ in range(300):
            n = rng.randint(1, 6)
            shape = rng.choice(partitions_of(n))
            p, q = rand_perm(rng, n), rand_perm(rng, n)
            u, v = rand_vector(rng, shape), rand_vector(rng, shape)
            a, b = rng.choice([1, 2, -3]), rng.choice([0.5, 4])
            lhs = act(p, a * u + b * v).to_array()
            rhs = (a * act(p, u) + b * act(p, v)).to_array()
            assert np.allclose(lhs, rhs, atol=1e-12)
            assert act(compose(p, q), v) == act(p, act(q, v))
            assert set(act(p, v).coeffs) <= set(basis_keys(shape))

    def test_inner_product_preserved(self):
        rng = random.Random(4)
        for _ in range(300):
            n = rng.randint(1, 6)
            shape = rng.choice(partitions_of(n))
            p = rand_perm(rng, n)
            u, v = rand_vector(rng, shape), rand_vector(rng, shape)
            assert abs(inner_product(act(p, u), act(p, v)) - inner_product(u, v)) <= 1e-12

    def test_all_ones_fixed(self):
        rng = random.Random(5)
        for shape in [(3, 1), (2, 2), (3, 2), (2, 2, 1)]:
            ones = KVector(shape, {k: 1 for k in basis_keys(shape)})
            for _ in range(20):
                assert act(rand_perm(rng, Partition(shape).n), ones) == ones

    def test_permutation_matrix_matches_action(self):
        rng = random.Random(6)
        for _ in range(30):
            shape = rng.choice(partitions_of(4))
            p = rand_perm(rng, 4)
            # build the matrix column by column from the basis, independently of permutation_matrix
            keys = basis_keys(shape)
            M = np.column_stack([act(p, KVector.basis(shape, k)).to_array() for k in keys])
            assert np.array_equal(M, permutation_matrix(p, shape))
            v = rand_vector(rng, shape)
            assert np.allclose(apply_matrix(M, v).to_array(), act(p, v).to_array())


class TestInnerProduct:
    def test_basis(self):
        e1 = KVector.basis((2, 2), "Y1,2,3,4")
        e2 = KVector.basis((2, 2), "Y1,3,2,4")
        assert inner_product(e1, e1) == 1
        assert inner_product(e1, e2) == 0

    def test_weighted_query_dot(self):
        idf2, idf1 = math.log10(3 / 2), math.log10(3)
        q = KVector((2, 2), {"Y1,2,3,4": idf2, "Y1,3,2,4": idf2})
        d2 = KVector((2, 2), {"Y1,2,3,4": idf2, "Y1,3,2,4": 2 * idf2})
        assert inner_product(q, d2) == pytest.approx(0.093, abs=1e-3)
        assert idf1 > idf2

    def test_shape_mismatch(self):
        with pytest.raises(InvalidArgumentError):
            inner_product(KVector.basis((2, 1), "Y1,2,3"), KVector.basis((3,), "Y1,2,3"))


class TestCharacters:
    def test_n4_table(self):
        table = character_table(4)
        assert [s.parts for s in table.shapes] == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
        assert table.values.tolist() == CHARS_N4
        assert table[(2, 2), (2, 1, 1)] == 2

    def test_single_cells(self):
        assert character((2, 2), parse_permutation("(1 2)", 4)) == 2
        assert character((3, 1), parse_permutation("(1 2 3)", 4)) == 1
        rng = random.Random(0)
        for _ in range(20):
            assert character((5,), rand_perm(rng, 5)) == 1

    def test_identity_column_is_dimension(self):
        for n in range(1, 7):
            table = character_table(n)
            assert table.values[:, 0].tolist() == [dimension(s) for s in table.shapes]

    def test_n3_row(self):
        # fixed-tabloid count by hand over the three (2,1) tabloids
        shape = Partition((2, 1))
        tabloids = enumerate_standard_tabloids(shape)
        expected = []
        for mu in [(1, 1, 1), (2, 1), (3,)]:
            g = Permutation.from_cycle_type(Partition(mu))
            expected.append(sum(1 for T in tabloids if act_on_tabloid(g, T).rows == T.rows))
        assert expected == [3, 1, 0]
        table = character_table(3)
        assert table.values[table.shapes.index(shape)].tolist() == expected

    def test_regular_row(self):
        for n in range(1, 6):
            row = character_table(n).values[0].tolist()
            assert row == [math.factorial(n)] + [0] * (len(row) - 1)

    def test_conjugacy_invariance(self):
        rng = random.Random(12)
        for _ in range(500):
            n = rng.randint(1, 6)
            shape = rng.choice(partitions_of(n))
            p, s = rand_perm(rng, n), rand_perm(rng, n)
            assert character(shape, compose(s, compose(p, inverse(s)))) == character(shape, p)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            character_table(11)
        with pytest.raises(CapacityError):
            character((3, 1), Permutation.identity(4), limit=2)


class TestDual:
    PHI = "6.5*Y1,2,3,4 + 7*Y1,3,2,4 + 7.5*Y1,4,2,3 + 7.5*Y2,3,1,4 + 8*Y2,4,1,3 + 8.5*Y3,4,1,2"

    def test_pair_batch(self):
        phi = parse_functional(self.PHI, (2, 2))
        d1 = parse_vector("Y1,3,2,4 + 2*Y1,4,2,3 + Y2,3,1,4 + Y3,4,1,2", (2, 2))
        assert pair(phi, d1) == 38
        assert phi(d1) == 38

    def test_dual_basis(self):
        keys = basis_keys((2, 2))
        for i, a in enumerate(keys):
            for j, b in enumerate(keys):
                assert pair(Functional.basis((2, 2), a), KVector.basis((2, 2), b)) == (i == j)

    def test_two_dimensional_example(self):
        # shape (1,1) gives a two-dimensional space
        psi = Functional.from_array((1, 1), [1, 2])
        v = KVector.from_array((1, 1), [1, 1])
        assert pair(psi, v) == 3
        M = np.diag([1.0, 3.0])
        assert apply_matrix(M, v).to_array().tolist() == [1, 3]
        psi2 = dual_transform(M, psi)
        assert psi2.to_array() == pytest.approx([1, 2 / 3], abs=1e-12)
        assert pair(psi2, apply_matrix(M, v)) == pytest.approx(3, abs=1e-12)

    def test_identity_matrix(self):
        rng = random.Random(9)
        v = rand_vector(rng, (2, 2))
        f = rand_vector(rng, (2, 2), Functional)
        assert apply_matrix(np.eye(6), v) == v
        assert np.allclose(dual_transform(np.eye(6), f).to_array(), f.to_array())

    def test_contragredient_preserves_pairing(self):
        rng = np.random.default_rng(10)
        prng = random.Random(10)
        checked = 0
        while checked < 200:
            shape = prng.choice([(2, 1), (2, 2), (3, 1), (1, 1, 1), (3, 2)])
            d = dimension(shape)
            M = rng.normal(size=(d, d))
            if np.linalg.cond(M) > 1e6:
                continue
            f = Functional.from_array(shape, rng.normal(size=d))
            v = KVector.from_array(shape, rng.normal(size=d))
            assert abs(pair(dual_transform(M, f), apply_matrix(M, v)) - pair(f, v)) <= 1e-9
            checked += 1

    def test_bilinear(self):
        rng = random.Random(11)
        f, g = rand_vector(rng, (3, 1), Functional), rand_vector(rng, (3, 1), Functional)
        u, v = rand_vector(rng, (3, 1)), rand_vector(rng, (3, 1))
        assert pair(2 * f + g, u) == pytest.approx(2 * pair(f, u) + pair(g, u))
        assert pair(f, 3 * u - v) == pytest.approx(3 * pair(f, u) - pair(f, v))

    def test_errors(self):
        v = KVector.basis((2, 2), "Y1,2,3,4")
        f = Functional.basis((2, 2), "Y1,2,3,4")
        with pytest.raises(InvalidArgumentError):
            apply_matrix(np.eye(5), v)
        with pytest.raises(InvalidArgumentError):
            apply_matrix(np.ones((6, 5)), v)
        with pytest.raises(SingularMatrixError):
            dual_transform(np.diag([1, 1, 1, 1, 1, 0.0]), f)
        with pytest.raises(SingularMatrixError):
            dual_transform(np.ones((6, 6)), f)
        with pytest.raises(InvalidArgumentError):
            pair(f, KVector.basis((3, 1), "Y1,2,3,4"))

    def test_relative_determinant(self):
        assert relative_determinant(np.eye(3)) == pytest.approx(1)
        assert relative_determinant(np.diag([1e-8, 1, 1])) == pytest.approx(1)
        assert relative_determinant([[1, 1], [1, 1 + 1e-14]]) < 1e-12


class TestTurnaroundFunctional:
    def test_chain(self, chain_graph, chain_system):
        phi = turnaround_functional((2, 2), chain_graph, chain_system)
        assert phi.to_array().tolist() == [6.5, 7, 7.5, 7.5, 8, 8.5]

    def test_single_task(self):
        phi = turnaround_functional((1,), TaskGraph({1: 3}), ProcessorSystem.consistent([4]))
        assert phi.coeffs == {"Y1": 0.75}

    def test_pairing_matches_k_copies(self):
        rng = random.Random(13)
        for _ in range(30):
            n = rng.randint(2, 5)
            shape = rng.choice(partitions_of(n))
            g = random_dag(rng, n)
            s = ProcessorSystem.consistent(random_rates_for_shape(rng, shape))
            phi = turnaround_functional(shape, g, s)
            keys = basis_keys(shape)
            v = KVector(shape, {k: rng.randint(0, 3) for k in rng.sample(keys, min(3, len(keys)))})
            if not v.coeffs:
                continue
            total, _ = k_copies_totals(v, phi.coeffs | {k: 0.0 for k in keys if k not in phi.coeffs})
            assert pair(phi, v) == pytest.approx(total, abs=1e-9)

    def test_row_rate_error_propagates(self, chain_graph):
        with pytest.raises(ValueError):
            turnaround_functional((2, 2), chain_graph, ProcessorSystem.consistent([1, 2, 3, 4]))
