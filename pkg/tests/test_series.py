import pytest
from hypothesis import given
from hypothesis import strategies as st

from nichols.catalog import ALGEBRAS
from nichols.series import (ONE, Factorization, HilbertSeries, NotDivisible, balanced_set,
                            balanced_set_by_classes, cyclic_class_sums, divide, divide_cyclic, divides, expand,
                            factorize, format_series, parse_series, q_poly)

alphas = st.lists(st.integers(2, 7), max_size=4)
betas = st.lists(st.integers(2, 4), max_size=2)


def test_q_poly():
    assert q_poly(3).coeffs == (1, 1, 1)
    assert q_poly(2, 2).coeffs == (1, 0, 1)
    assert q_poly(1) == ONE


def test_expansion_of_reference_rows():
    assert expand((2, 2, 3)).coeffs == (1, 3, 4, 3, 1)
    assert expand((2, 2, 3, 6)).total == 72
    assert expand((6, 6, 6, 6), (2, 2)).total == 5184
    for a in ALGEBRAS.values():
        assert a.hilbert.total == a.dim


def test_text_form():
    h = expand((2, 2, 3))
    assert str(h) == "1+3t+4t^2+3t^3+t^4"
    assert parse_series("1+3t+4t^2+3t^3+t^4") == h
    assert format_series((1, 0, 2)) == "1+2t^2"


@given(alphas, betas)
def test_parse_format_round_trip(a, b):
    h = expand(a, b)
    assert parse_series(str(h)) == h


@given(alphas, betas, st.integers(2, 7))
def test_division(a, b, k):
    h = expand(a, b)
    g = expand([k])
    assert divide(h * g, g) == h
    assert divide_cyclic(h * g, k) == h
    assert divides(g, h * g)


def test_not_divisible():
    with pytest.raises(NotDivisible):
        divide_cyclic(expand((2, 2, 3)), 4)
    assert not divides(q_poly(5), expand((2, 2, 3)))


@given(alphas, betas)
def test_balance_two_ways(a, b):
    # (k)_t | H  <=>  all class sums modulo k agree
    h = expand(a, b)
    assert balanced_set(h) == balanced_set_by_classes(h)
    for k in balanced_set(h):
        assert len(set(cyclic_class_sums(h, k))) == 1


@given(st.lists(st.integers(2, 6), min_size=1, max_size=3), betas)
def test_factorize_recovers_expansion(a, b):
    h = expand(a, b)
    f = factorize(h)
    assert f is not None
    assert f.expand() == h


def test_factorize_reference_rows():
    for a in ALGEBRAS.values():
        f = factorize(a.hilbert)
        assert f.expand() == a.hilbert
        assert (f.alphas, f.betas) == (tuple(sorted(a.alphas, reverse=True)), tuple(sorted(a.betas, reverse=True))) \
            or str(f) == str(Factorization(a.alphas, a.betas))


def test_beta_factorizations_needed():
    # no product of (k)_t alone reproduces these two series
    for name in ("3B", "4C"):
        h = ALGEBRAS[name].hilbert
        fs = factorize(h, all_solutions=True)
        assert fs and all(f.expand() == h for f in fs)
        assert all(f.betas for f in fs)
    assert str(factorize(ALGEBRAS["4C"].hilbert)) == "(6)^4(2)_{t^2}^2"
    assert str(factorize(ALGEBRAS["3B"].hilbert)) == "(3)(4)(6)(6)_{t^2}"


def test_factorization_not_unique():
    h = ALGEBRAS["4C"].hilbert
    assert len(factorize(h, all_solutions=True)) > 1


def test_balanced_sets_of_reference_series():
    assert balanced_set(ALGEBRAS["3A"].hilbert) == {2, 3}
    assert balanced_set(ALGEBRAS["4B"].hilbert) == {2, 3, 6}
    # beyond the reference window k <= 7, (6)_{t^2} = (12)_t / (2)_t makes 3B C_12-balanced
    assert balanced_set(ALGEBRAS["3B"].hilbert) == {2, 3, 4, 6, 12}


def test_series_arithmetic():
    h = HilbertSeries.of(1, 1)
    assert (h ** 3).coeffs == (1, 3, 3, 1)
    assert (h * ONE) == h
    assert h.degree == 1 and (h ** 3).total == 8
