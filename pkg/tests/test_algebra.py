import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nichols import linalg
from nichols.algebra import (BuildError, IncompleteAlgebra, Limits, braided_commutator, build, derivation,
                             g_action, g_action_inv, kernel_basis, kernel_intersection, left_mul,
                             nilpotency_order, op_derivation)
from nichols.cocycles import catalog_cocycle, constant_cocycle
from nichols.racks import catalog_quandle, trivial_quandle

from oracles import graded_dims

# graded dimensions from the rank of the braided symmetrizer (tests/oracles.py), frozen;
# 4B and 4A only up to degree 5 where the dense oracle stays cheap
ORACLE_DIMS = {
    "3A": [1, 3, 4, 3, 1, 0],
    "4B": [1, 4, 8, 11, 12, 12],
    "4A": [1, 4, 8, 10, 8, 4],
}


def random_element(A, rng, terms=4, max_degree=None):
    F = A.field
    top = A.top_degree if max_degree is None else min(max_degree, A.top_degree)
    x = A.zero()
    for _ in range(rng.randint(1, terms)):
        d = rng.randint(0, top)
        i = rng.randrange(A.dims[d])
        c = F(rng.randint(-3, 3))
        if c:
            x = x + A.from_vector(d, {i: c})
    return x


def homogeneous_basis(A, d):
    return [A.from_vector(d, {i: A.field.one}) for i in range(A.dims[d])]


def test_dims_match_frozen_oracle(alg):
    for name, dims in ORACLE_DIMS.items():
        A = alg(name)
        got = list(A.dims) + [0] * len(dims)
        assert got[:len(dims)] == dims


def test_oracle_live_on_low_degrees():
    r = catalog_quandle("Q4_1")
    assert graded_dims(r.table, [[-1] * 4] * 4, 3) == ORACLE_DIMS["4B"][:4]
    r = catalog_quandle("Q3_1")
    assert graded_dims(r.table, [[-1] * 3] * 3, 5) == ORACLE_DIMS["3A"]


def test_basic_shape(small):
    A = small
    assert A.complete
    assert A.dims[0] == 1 and A.basis(0) == [()]
    assert A.dims[1] == A.n and A.basis(1) == [(t,) for t in range(A.n)]
    assert A.dims[-1] > 0
    # bases are closed under taking prefixes, the candidates being b * e_u
    for d in range(2, len(A.dims)):
        prev = set(A.basis(d - 1))
        assert all(w[:-1] in prev for w in A.basis(d))
        assert A.basis(d) == sorted(A.basis(d), key=lambda w: (A.index(d - 1)[w[:-1]], w[-1]))


def test_product_rule_random_pairs(small):
    # d_t(x y) = x d_t(y) + d_t(x) g_t(y), 1000 pairs per algebra
    A = small
    rng = random.Random(20240601)
    for _ in range(1000):
        x = random_element(A, rng, 3)
        y = random_element(A, rng, 3)
        t = rng.randrange(A.n)
        xy = x * y
        assert derivation(t, xy) == x * derivation(t, y) + derivation(t, x) * g_action(t, y)


def test_associativity_and_unit(small):
    A = small
    rng = random.Random(7)
    one = A.one()
    for _ in range(200):
        x, y, z = (random_element(A, rng, 3) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert one * x == x == x * one


def test_g_action_is_an_automorphism(small):
    A = small
    rng = random.Random(11)
    for _ in range(200):
        x, y = random_element(A, rng), random_element(A, rng)
        t = rng.randrange(A.n)
        assert g_action(t, x * y) == g_action(t, x) * g_action(t, y)
        assert g_action_inv(t, g_action(t, x)) == x


def test_commutation_of_derivations(small):
    # d^op_s d_t = d_t d^op_s on every basis vector of every degree
    A = small
    for s in range(A.n):
        for t in range(A.n):
            for d in range(len(A.dims)):
                for b in homogeneous_basis(A, d):
                    assert op_derivation(s, derivation(t, b)) == derivation(t, op_derivation(s, b))


def test_derivation_twisted_by_g(small):
    # d_t g_t = q g_t d_t
    A = small
    q = A.q
    for t in range(A.n):
        for d in range(len(A.dims)):
            for b in homogeneous_basis(A, d):
                assert derivation(t, g_action(t, b)) == g_action(t, derivation(t, b)).scaled(q)


def test_stacked_derivations_injective(small):
    A = small
    one = A.field.one
    for d in range(1, len(A.dims)):
        D = A.dims[d - 1]
        cols = []
        for i in range(A.dims[d]):
            col = {}
            for t in range(A.n):
                for j, a in A.degrees[d].deriv[t][i].items():
                    col[t * D + j] = a
            cols.append(col)
        assert linalg.rank(cols, one) == A.dims[d]
    # same for the opposite derivations
    for d in range(1, len(A.dims)):
        assert kernel_basis(A, d, range(A.n), op=True) == []


def test_top_degree_is_one_dimensional(small):
    assert small.dims[-1] == 1


def test_nilpotency_orders(small):
    A = small
    for t in range(A.n):
        assert nilpotency_order(A.e(t)) == A.m
    assert nilpotency_order(A.one()) is None
    assert nilpotency_order(A.zero()) == 1


def test_nilpotency_of_sum_in_3A(A3):
    assert nilpotency_order(A3.e(0) + A3.e(1)) == 4


def test_3A_products(A3):
    e = A3.e
    F = A3.field
    # e1 e2 + e2 e3 + e3 e1 = 0
    assert e(0) * e(1) + e(1) * e(2) + e(2) * e(0) == A3.zero()
    assert e(0) * e(0) == A3.zero()
    top = A3.reduce_word((0, 1, 0, 2))
    assert top.degree == 4 and top
    assert braided_commutator(e(0), e(1)) == e(0) * e(1) + e(2) * e(0)
    assert braided_commutator(e(0), e(0)) == (e(0) * e(0)).scaled(F(2))


def test_relations_of_the_72_dimensional_algebra(B4):
    e = lambda t: B4.e(t - 1)
    zero = B4.zero()
    for t in range(1, 5):
        assert e(t) * e(t) == zero
    for r, s, t in [(4, 3, 2), (4, 2, 1), (4, 1, 3), (3, 1, 2)]:
        assert e(r) * e(s) + e(s) * e(t) + e(t) * e(r) == zero
    w = lambda a, b, c: e(a) * e(b) * e(c)
    assert w(3, 2, 1) ** 2 + w(2, 1, 3) ** 2 + w(1, 3, 2) ** 2 == zero
    assert w(3, 2, 1) ** 2 != zero


def test_72_dimensional_basis_from_optional_factors(B4):
    # [e1][e2[e1]][e3 e2 e1][e3[e2]][e4], each bracket optional
    e = lambda t: B4.e(t - 1)
    one = B4.one()
    f1 = [one, e(1)]
    f2 = [one, e(2), e(2) * e(1)]
    f3 = [one, e(3) * e(2) * e(1)]
    f4 = [one, e(3), e(3) * e(2)]
    f5 = [one, e(4)]
    from nichols.shifts import to_global
    vecs = [to_global(a * b * c * d * g) for a in f1 for b in f2 for c in f3 for d in f4 for g in f5]
    assert len(vecs) == 72
    assert linalg.rank(vecs, B4.field.one) == 72


def test_left_multiplication_matches_product(small):
    A = small
    rng = random.Random(3)
    for _ in range(100):
        x = random_element(A, rng)
        t = rng.randrange(A.n)
        assert left_mul(t, x) == A.e(t) * x


def test_reduce_word(A3):
    assert A3.reduce_word((1, 0)) == A3.e(1) * A3.e(0)
    assert A3.reduce_word(()) == A3.one()
    assert A3.reduce_word((0, 0)) == A3.zero()


def test_kernel_intersection_3A(A3):
    k = kernel_intersection(A3, {0})
    assert k["dims"] == [1, 2, 2, 1, 0]
    assert k["identity_dim"] == 1
    with pytest.raises(ValueError):
        kernel_intersection(A3, set())


def test_graded_dims(B4):
    assert sum(B4.graded_dims("Z").values()) == 72
    assert B4.graded_dims(("cyclic", 2)) == {0: 36, 1: 36}
    assert sum(B4.graded_dims("inn").values()) == 72
    assert sum(B4.graded_dims("env").values()) == 72


def test_incomplete_build():
    r = catalog_quandle("Q3_1")
    c = constant_cocycle(r, "Q", -1)
    A = build(r, c, Limits(max_degree=2))
    assert not A.complete and A.dims == [1, 3, 4]
    with pytest.raises(IncompleteAlgebra):
        A.require_complete()
    B = build(r, c, Limits(max_total_dim=5))
    assert not B.complete


def test_build_errors():
    t = trivial_quandle(2)
    with pytest.raises(BuildError):
        build(t, constant_cocycle(t, "Q", -1))
    r = catalog_quandle("Q3_1")
    with pytest.raises(BuildError):
        build(r, constant_cocycle(r, "Q", 2))
    with pytest.raises(ValueError):
        Limits(max_degree=0)


def test_degree_limit_stops_large_input():
    r = catalog_quandle("Q3_1")
    c = constant_cocycle(r, "GF(5)", 1)
    A = build(r, c, Limits(max_degree=3))
    assert A.m == 5
    assert not A.complete


@given(st.lists(st.integers(0, 2), max_size=6))
def test_word_reduction_agrees_with_products(word):
    from nichols.catalog import cached
    A = cached("3A")
    x = A.one()
    for t in word:
        x = x * A.e(t)
    assert A.reduce_word(tuple(word)) == x


def test_other_fields():
    r = catalog_quandle("Q3_1")
    A = build(r, constant_cocycle(r, "GF(3)", -1))
    assert A.dims == [1, 3, 4, 3, 1]
    A = build(r, catalog_cocycle("const(-1)", r, "Q(zeta3)"))
    assert A.dim == 12
