import pytest

from nichols.catalog import ALGEBRAS, DESK, LargeAlgebraError, build_named, named
from nichols.tables import AlgebraSource, balance_table, env_table, inn_table, quotient_table


@pytest.fixture(scope="module")
def source(alg):
    return AlgebraSource(loader=alg)


def test_catalog_rows():
    assert len(ALGEBRAS) == 14
    assert DESK == ("3A", "3B", "4A", "4B", "4C", "5A", "5B", "6A", "6B", "6C")
    for a in ALGEBRAS.values():
        assert a.hilbert.total == a.dim
    with pytest.raises(LargeAlgebraError):
        build_named("10A")
    with pytest.raises(KeyError):
        named("9Z")


def test_inn_table(source):
    t = inn_table(source)
    assert t.all_match and len(t.rows) == 12
    assert sorted(r["dim"] for r in t.rows) == [4, 4, 4] + [6] * 8 + [12]


def test_env_table(source):
    t = env_table(source)
    assert t.all_match
    assert {r["dim"]: r["classes"] for r in t.rows} == {5: 2, 3: 8, 2: 8, 1: 22}
    assert sum(r["dim"] * r["classes"] for r in t.rows) == 72


def test_env_classes_named_in_the_reference(B4):
    from nichols.racks import env_class
    dims = B4.graded_dims("env")
    for word in [(2, 1, 0), (1, 2, 1, 0, 2, 3)]:
        assert dims[env_class(B4.rack, word).canonical] == 5


def test_balance_table_on_small_rows(source):
    t = balance_table(source, ["3A", "4A", "4B", "10A"])
    assert t.all_match
    row = {r["algebra"]: r for r in t.rows}
    assert row["3A"]["by_division"] == {2, 3}
    # unbuilt rows still get the division side from the known series
    assert "by_class_sums" not in row["10A"] and row["10A"]["match"]


def test_render_and_json(source):
    t = inn_table(source)
    text = t.render()
    assert text.splitlines()[0] == "inn_grading_4B"
    assert "(1,2,3)" in text
    assert t.to_json()["all_match"] is True


def test_quotient_rows_without_large_builds(alg):
    # only 3A and 6A; 4C is covered by the acceptance suite
    class Small(AlgebraSource):
        def available(self, name):
            return name in ("3A", "6A")

    t = quotient_table(Small(loader=alg))
    rows = {r["algebra"]: r for r in t.rows}
    assert rows["3A"]["quotient"] == 1 and rows["3A"]["match"]
    assert rows["6A"]["quotient"] == 2 and rows["6A"]["match"]
    assert rows["4C"]["match"] is None and rows["10A"]["match"] is None
