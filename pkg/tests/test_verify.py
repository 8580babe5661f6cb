import json

import pytest

from nichols.verify import (Check, VerificationReport, check_cyclic_balance, check_dim_divisibility,
                            check_embedding, check_grana_factorization, check_hilbert_divisibility,
                            check_inner_balanced, check_square_divisibility, check_subrack_admissibility,
                            full_report, inn_component_dims, sub_algebra, subrack_report, word_span_dims)


def test_inner_balance_3A(A3):
    c = check_inner_balanced(A3)
    assert c.passed
    assert set(inn_component_dims(A3).values()) == {2}


def test_inner_balance_negative_control(B4):
    assert check_inner_balanced(B4).is_skipped
    forced = check_inner_balanced(B4, force=True)
    assert forced.verdict == "fail"
    assert forced.witness == {"distinct_dims": [4, 6, 12]}


def test_dim_divisibility_3A(A3):
    c = check_dim_divisibility(A3, {0})
    assert c.passed
    assert c.computed == {"dim": 12, "inn_order": 6, "sub_dim": 2, "quotient": 1, "product": 12}


def test_dim_divisibility_6A_three_element_subrack(alg):
    A = alg("6A")
    c = check_dim_divisibility(A, {0, 2, 4})
    assert c.passed
    assert (c.computed["inn_order"], c.computed["sub_dim"], c.computed["quotient"]) == (24, 12, 2)


def test_dim_divisibility_skips_when_n_does_not_divide_m(B4):
    assert check_dim_divisibility(B4, {0}).is_skipped


def test_subrack_admissibility(alg):
    from nichols.racks import catalog_quandle
    r = catalog_quandle("Q6_1")
    assert check_subrack_admissibility(r, {0, 2, 4}).passed
    assert check_subrack_admissibility(r, {0, 1}).passed
    bad = check_subrack_admissibility(r, {0, 2})
    assert bad.verdict == "fail" and bad.computed["subrack"] is False
    with pytest.raises(ValueError):
        check_subrack_admissibility(r, set())
    with pytest.raises(ValueError):
        check_subrack_admissibility(r, set(range(6)))


@pytest.mark.parametrize("name", ["3A", "4A", "4B", "6A"])
def test_singleton_reports(alg, name):
    A = alg(name)
    for t in range(A.n):
        rep = subrack_report(A, {t})
        assert rep.ok, rep.summary()
        assert {c.name for c in rep.checks} >= {"hilbert_divisibility", "grana_factorization",
                                                "subalgebra_embedding"}


def test_subalgebra_embedding(alg):
    A = alg("6A")
    B1 = sub_algebra(A, {0, 2, 4})
    assert B1.dims == [1, 3, 4, 3, 1]
    assert word_span_dims(A, {0, 2, 4}) == [1, 3, 4, 3, 1]
    assert check_embedding(A, {0, 2, 4}, B1).passed
    assert check_hilbert_divisibility(A, {0, 2, 4}, B1).passed
    assert check_grana_factorization(A, {0, 2, 4}, B1).passed


def test_cyclic_and_square_checks(small):
    from nichols.catalog import ALGEBRAS, BALANCE_WINDOW
    name = small.name
    assert check_cyclic_balance(small, ALGEBRAS[name].balanced, BALANCE_WINDOW).passed
    assert check_cyclic_balance(small).passed
    assert check_square_divisibility(small).passed
    wrong = set(ALGEBRAS[name].balanced) ^ {7}
    assert check_cyclic_balance(small, wrong, BALANCE_WINDOW).verdict == "fail"


def test_full_report_and_json():
    rep = full_report(["3A", "4B", "7A"])
    assert rep.ok
    skipped = [c for c in rep.checks if c.is_skipped]
    assert any(c.inputs == {"algebra": "7A"} for c in skipped)
    data = json.loads(rep.dumps())
    assert data["ok"] is True
    assert all(set(c) >= {"name", "inputs", "expected", "computed", "verdict"} for c in data["checks"])


def test_report_failure_detection():
    rep = VerificationReport("x")
    rep.add(Check("a", {}, 1, 1, "pass"))
    rep.add(Check("b", {}, 1, None, "skipped(reason)"))
    assert rep.ok
    rep.add(Check("c", {}, 1, 2, "fail"))
    assert not rep.ok and [c.name for c in rep.failures()] == ["c"]
