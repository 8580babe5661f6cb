import gmpy2
import numpy as np
import sympy
from hypothesis import given
from hypothesis import strategies as st

from nichols import linalg
from nichols.modp import ModPEchelon, rank_mod_p
from nichols.scalars import make_field

ONE = gmpy2.mpq(1)


def matrices(max_rows=6, max_cols=6, lo=-3, hi=3):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)))


def sparse_rows(M):
    return [{j: gmpy2.mpq(x) for j, x in enumerate(row) if x} for row in M]


def sparse_cols(M):
    return sparse_rows(list(map(list, zip(*M))))


@given(matrices())
def test_rank_matches_sympy(M):
    r = sympy.Matrix(M).rank()
    assert linalg.rank(sparse_rows(M), ONE) == r
    assert linalg.sparse_rank(sparse_rows(M), ONE) == r
    assert linalg.kernel_dim(sparse_cols(M), ONE) == len(M[0]) - r


@given(matrices())
def test_nullspace(M):
    cols = sparse_cols(M)
    ns = linalg.nullspace(cols, ONE)
    assert len(ns) == len(M[0]) - sympy.Matrix(M).rank()
    for v in ns:
        assert not linalg.matvec(cols, v)
    assert linalg.rank(ns, ONE) == len(ns)


@given(matrices(5, 5, -5, 5))
def test_modp_rank_is_exact_for_small_entries(M):
    # all minors are below the prime, so rank mod p equals the rational rank
    assert rank_mod_p(np.array(M, dtype=float)) == sympy.Matrix(M).rank()


@given(matrices(8, 6, 0, 1))
def test_modp_echelon_accepts_independent_rows(M):
    ech = ModPEchelon(len(M[0]))
    acc = ech.add_rows(np.array(M, dtype=float))
    assert len(acc) == sympy.Matrix(M).rank()
    kept = [M[i] for i in acc]
    assert sympy.Matrix(kept).rank() == len(kept)


def test_echelon_tracks_coordinates():
    ech = linalg.Echelon(ONE, track=True)
    a = {0: ONE, 1: gmpy2.mpq(2)}
    b = {1: ONE, 2: ONE}
    assert ech.add(a) is None and ech.add(b) is None
    c = linalg.add(linalg.scale(gmpy2.mpq(3), a), linalg.scale(gmpy2.mpq(-1, 2), b), ONE)
    coords = ech.add(c)
    assert coords == {0: 3, 1: gmpy2.mpq(-1, 2)}


def test_commutant_dimensions():
    n = 4
    ident = linalg.identity(n, ONE)
    assert len(linalg.commutant([ident], n, ONE)) == n * n
    diag = [{i: gmpy2.mpq(i + 1)} for i in range(n)]
    assert linalg.commutant([diag], n, ONE, basis=False) == n
    # a single Jordan block commutes only with polynomials in itself
    jordan = [{0: ONE}] + [{i - 1: ONE, i: ONE} for i in range(1, n)]
    C = linalg.commutant([jordan], n, ONE)
    assert len(C) == n
    for X in C:
        assert linalg.compose(X, jordan) == linalg.compose(jordan, X)


def test_linalg_over_finite_field():
    F = make_field("GF(4)")
    g = F.root_of_unity(3)
    rows = [{0: F.one, 1: g}, {0: g, 1: g * g}, {1: F.one}]
    assert linalg.rank(rows, F.one) == 2
    assert linalg.same_span(rows[:1], [{0: g, 1: g * g}], F.one)
