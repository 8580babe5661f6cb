import pytest
from hypothesis import given
from hypothesis import strategies as st

from nichols.cocycles import (Cocycle, CocycleError, catalog_cocycle, cocycle_order, constant_cocycle,
                              extended_cocycle, validate_cocycle)
from nichols.racks import catalog_quandle
from nichols.scalars import make_field


@pytest.mark.parametrize("name,quandle,field,m", [
    ("const(-1)", "Q3_1", "Q", 2),
    ("const(E3)", "Q3_1", "GF(4)", 3),
    ("const(-1)", "Q4_1", "GF(2)", 2),
    ("chi4", "Q4_1", "Q(zeta3)", 3),
    ("chi6", "Q6_1", "Q", 2),
    ("chi10", "Q10_1", "Q", 2),
])
def test_catalog_cocycles_are_cocycles(name, quandle, field, m):
    c = catalog_cocycle(name, catalog_quandle(quandle), field)
    assert validate_cocycle(c) is None
    assert cocycle_order(c) == m


def test_chi4_shape():
    c = catalog_cocycle("chi4", catalog_quandle("Q4_1"), "Q(zeta3)")
    e = c.field.root_of_unity(3)
    assert c.matrix[0] == (e, -e, -e, e)
    assert c.matrix[3] == (e,) * 4


def test_perturbed_cocycle_fails():
    r = catalog_quandle("Q3_1")
    m = [["-1"] * 3 for _ in range(3)]
    m[2][2] = "1"
    c = Cocycle(r, "Q", m)
    bad = validate_cocycle(c)
    assert bad is not None
    assert bad.lhs != bad.rhs


def test_chi4_needs_third_roots():
    with pytest.raises(CocycleError):
        catalog_cocycle("chi4", catalog_quandle("Q4_1"), "Q")


def test_nonconstant_diagonal_is_rejected():
    r = catalog_quandle("Q3_1")
    c = Cocycle(r, "Q", [["-1", "1", "1"], ["1", "1", "1"], ["1", "1", "1"]])
    with pytest.raises(CocycleError):
        _ = c.q


def test_trivial_cocycle_has_infinite_order():
    c = constant_cocycle(catalog_quandle("Q3_1"), "Q", 1)
    assert cocycle_order(c) is None


def test_json_round_trip():
    c = catalog_cocycle("chi4", catalog_quandle("Q4_1"), "Q(zeta3)")
    d = Cocycle.from_json(c.to_json(), c.rack)
    assert d.matrix == c.matrix


@given(st.lists(st.integers(0, 3), max_size=6), st.integers(0, 3))
def test_extended_cocycle_is_multiplicative(word, s):
    # g_{uv} = g_u g_v on the degree-one part
    c = catalog_cocycle("chi4", catalog_quandle("Q4_1"), "Q(zeta3)")
    lam, target = extended_cocycle(c, word, s)
    lam2, target2 = c.field.one, s
    for x in reversed(word):
        lam2 = lam2 * c.matrix[x][target2]
        target2 = c.rack.table[x][target2]
    assert (lam, target) == (lam2, target2)


def test_restriction():
    c = catalog_cocycle("chi6", catalog_quandle("Q6_1"), "Q")
    sub = c.restrict([0, 1, 2, 3, 4, 5][:1])
    assert sub.rack.size == 1
    assert sub.q == make_field("Q")(-1)
