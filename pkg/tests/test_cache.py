from __future__ import annotations

import json

import pytest

from polycount.cache import (
    entry_path,
    load_entry,
    resolve_cache_dir,
    save_entry,
)
from polycount.errors import ParameterError
from polycount.lattice import LatticeSpec, count_polynomial


def test_round_trip(tmp_path):
    table = count_polynomial(LatticeSpec(3, 4, 2))
    save_entry(tmp_path, table)
    loaded = load_entry(tmp_path, 2, 3, 4)
    assert loaded is not None
    assert loaded.counts == table.counts
    assert loaded.spec == table.spec


def test_schema(tmp_path):
    table = count_polynomial(LatticeSpec(2, 2, 2))
    path = save_entry(tmp_path, table)
    data = json.loads(path.read_text())
    assert data == {
        "version": 1,
        "k": 2,
        "n": 2,
        "m": 2,
        "counts": ["1", "4", "2"],
    }
    assert all(isinstance(c, str) for c in data["counts"])


def test_miss_and_partial(tmp_path):
    assert load_entry(tmp_path, 2, 5, 5) is None
    # a truncated table is not served as a full one
    partial = count_polynomial(LatticeSpec(4, 4, 2), s_max=2)
    save_entry(tmp_path, partial)
    assert load_entry(tmp_path, 2, 4, 4) is None


def test_key_mismatch(tmp_path):
    table = count_polynomial(LatticeSpec(2, 3, 2))
    path = entry_path(tmp_path, 2, 9, 9)
    tmp_path.mkdir(exist_ok=True)
    path.write_text(
        json.dumps({"version": 1, "k": 2, "n": 2, "m": 3,
                    "counts": [str(c) for c in table.counts]})
    )
    with pytest.raises(ParameterError):
        load_entry(tmp_path, 2, 9, 9)


def test_dir_resolution(tmp_path, monkeypatch):
    assert resolve_cache_dir("/x/y") == __import__("pathlib").Path("/x/y")
    monkeypatch.setenv("POLYCOUNT_CACHE", str(tmp_path / "envdir"))
    assert resolve_cache_dir(None) == tmp_path / "envdir"
    monkeypatch.delenv("POLYCOUNT_CACHE")
    default = resolve_cache_dir(None)
    assert default.name == "polycount"
