#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Test `rberga06.orbits.store`."""
from __future__ import annotations
import json
from pathlib import Path
from rberga06.orbits.orbits import LevelSet, level_set
from rberga06.orbits.store import *
from rberga06.orbits.words import parse_word
from .testutils import Feat

Feat.OTHER.required()


U = parse_word("aabbb", 2)


class TestLevelSetStore:
    def test_round_trip(self, tmp_path: Path) -> None:
        store = LevelSetStore(tmp_path)
        assert store.load(U) is None
        ls = level_set(U, store=store)
        assert all(p.is_file() for p in store.paths(U))
        assert store.load(U) == (ls.core, ls.members)

    def test_layout(self, tmp_path: Path) -> None:
        store = LevelSetStore(tmp_path)
        core, members, meta = store.paths(U)
        assert core.parent == members.parent == meta.parent == tmp_path / "rank-2"
        assert core.name.endswith(".core.jsonl") and meta.name.endswith(".meta.json")
        assert repr(store) == f"LevelSetStore({str(tmp_path)!r})"

    def test_deterministic(self, tmp_path: Path) -> None:
        a, b = LevelSetStore(tmp_path / "a"), LevelSetStore(tmp_path / "b")
        level_set(U, store=a)
        level_set(U, store=b)
        for p, q in zip(a.paths(U), b.paths(U)):
            assert p.read_bytes() == q.read_bytes()

    def test_meta(self, tmp_path: Path) -> None:
        store = LevelSetStore(tmp_path)
        ls = level_set(U, store=store)
        meta = json.loads(store.paths(U)[2].read_text("utf-8"))
        assert meta["schema"] == 1
        assert meta["base"] == [1, 1, 2, 2, 2] and meta["rank"] == 2
        assert (meta["core"], meta["members"]) == (len(ls.core), ls.count)

    def test_hit(self, tmp_path: Path) -> None:
        # a stored entry wins over recomputation
        store = LevelSetStore(tmp_path)
        store.save(LevelSet(U, frozenset({U}), frozenset({U})))
        assert level_set(U, store=store).count == 1

    def test_malformed(self, tmp_path: Path) -> None:
        store = LevelSetStore(tmp_path)
        level_set(U, store=store)
        store.paths(U)[2].write_text("{not json", "utf-8")
        assert store.load(U) is None

    def test_other_version(self, tmp_path: Path) -> None:
        store = LevelSetStore(tmp_path)
        level_set(U, store=store)
        meta_path = store.paths(U)[2]
        meta = json.loads(meta_path.read_text("utf-8"))
        meta["version"] = "99.0.0"
        meta_path.write_text(json.dumps(meta), "utf-8")
        assert store.load(U) is None

    def test_truncated(self, tmp_path: Path) -> None:
        store = LevelSetStore(tmp_path)
        level_set(U, store=store)
        core_path = store.paths(U)[0]
        lines = core_path.read_text("utf-8").splitlines(keepends=True)
        core_path.write_text("".join(lines[:-1]), "utf-8")
        assert store.load(U) is None

    def test_incomplete(self, tmp_path: Path) -> None:
        store = LevelSetStore(tmp_path)
        level_set(U, store=store)
        store.paths(U)[2].unlink()
        assert store.load(U) is None


class TestCacheMeta:
    def test_alias(self) -> None:
        meta = CacheMeta(version="0.1.0", rank=2, base=[1], core=4, members=4)
        assert meta.schema_version == 1
        assert json.loads(meta.model_dump_json(by_alias=True))["schema"] == 1
