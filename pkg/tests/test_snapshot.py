import hashlib

import pytest

from nichols import snapshot
from nichols.algebra import Limits, build
from nichols.catalog import build_named
from nichols.cocycles import constant_cocycle
from nichols.racks import catalog_quandle


@pytest.mark.parametrize("name", ["3A", "4A", "4B"])
def test_round_trip_is_bit_exact(alg, name, tmp_path):
    A = alg(name)
    path = snapshot.save(A, tmp_path / f"{name}.json")
    B = snapshot.load(path)
    assert B.dims == A.dims
    for da, db in zip(A.degrees, B.degrees):
        assert da.basis == db.basis
        for key in snapshot.MATRICES:
            assert getattr(da, key) == getattr(db, key)
        assert da.lam == db.lam and da.perm == db.perm
    assert snapshot.dumps(B) == snapshot.dumps(A)


def test_round_trip_over_gf4(alg):
    A = alg("3B")
    assert snapshot.dumps(snapshot.from_json(snapshot.dumps(A))) == snapshot.dumps(A)


def test_independent_builds_are_byte_identical():
    a = hashlib.sha256(snapshot.dumps(build_named("4B")).encode()).hexdigest()
    b = hashlib.sha256(snapshot.dumps(build_named("4B")).encode()).hexdigest()
    assert a == b


def test_header_only_snapshot_rebuilds(A3):
    text = snapshot.dumps(A3, matrices=False)
    B = snapshot.from_json(text)
    assert B.dims == A3.dims
    assert snapshot.dumps(B) == snapshot.dumps(A3)


def test_incomplete_flag_survives(tmp_path):
    r = catalog_quandle("Q3_1")
    A = build(r, constant_cocycle(r, "Q", -1), Limits(max_degree=2))
    B = snapshot.load(snapshot.save(A, tmp_path / "p.json"))
    assert not B.complete and B.dims == [1, 3, 4]


def test_rejects_foreign_json():
    with pytest.raises(ValueError):
        snapshot.from_json('{"header": {"format": "other"}, "degrees": []}')


def test_cache_helpers(monkeypatch, tmp_path):
    monkeypatch.delenv("NICHOLS_CACHE_DIR", raising=False)
    assert snapshot.cache_dir() is None
    monkeypatch.setenv("NICHOLS_CACHE_DIR", str(tmp_path))
    assert snapshot.cache_dir() == tmp_path
    key = snapshot.cache_key("Q3_1", "const(-1)", "Q", Limits())
    assert "/" not in key and key.endswith(".json")
