#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Test `rberga06.orbits.config`."""
from __future__ import annotations
from pathlib import Path
from pydantic import ValidationError
import pytest
from rberga06.orbits.config import *
from rberga06.orbits.errors import RankGuardError
from .testutils import Feat

Feat.OTHER.required()


EXPERIMENT = """\
rank: 3
words: [aabbbcccc, "x1 x2 x3"]
random:
  lengths: [6, 7]
  samples: 5
max_degree: 1
auto_minimize: true
"""


class TestExperimentConfig:
    def test_read(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv(CACHE_DIR_ENV, raising=False)
        file = tmp_path / "experiment.yaml"
        file.write_text(EXPERIMENT, "utf-8")
        cfg = ExperimentConfig.read(file)
        assert cfg.rank == 3 and cfg.words == ["aabbbcccc", "x1 x2 x3"]
        assert cfg.random == RandomWords(lengths=[6, 7], samples=5)
        assert cfg.random.seed == 0
        assert cfg.max_degree == 1 and cfg.auto_minimize
        assert cfg.cache_dir is None and cfg.output is None

    def test_empty_file(self, tmp_path: Path) -> None:
        file = tmp_path / "empty.yaml"
        file.write_text("", "utf-8")
        with pytest.raises(ValidationError):
            ExperimentConfig.read(file)

    def test_rank_guard(self) -> None:
        with pytest.raises(RankGuardError) as exc:
            ExperimentConfig(rank=7)
        assert exc.value.exit_code == 2
        assert ExperimentConfig(rank=7, override_rank_guard=True).rank == 7

    def test_invalid(self) -> None:
        with pytest.raises(ValidationError):
            ExperimentConfig(rank="two")
        with pytest.raises(ValidationError):
            ExperimentConfig(rank=2, random={"samples": 3})

    def test_cache_dir(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv(CACHE_DIR_ENV, str(tmp_path))
        assert default_cache_dir() == tmp_path
        assert ExperimentConfig(rank=2).cache_dir == tmp_path
        assert ExperimentConfig(rank=2, cache_dir=tmp_path / "x").cache_dir == tmp_path / "x"
        monkeypatch.setenv(CACHE_DIR_ENV, "")
        assert default_cache_dir() is None
