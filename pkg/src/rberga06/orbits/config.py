#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Experiment configuration, read from YAML files."""
from __future__ import annotations
import os
from pathlib import Path
from typing_extensions import Self, final
from pydantic import BaseModel, FilePath, model_validator
import yaml
from .errors import RankGuardError
from .moves import RANK_GUARD


CACHE_DIR_ENV = "WH_CACHE_DIR"


def default_cache_dir() -> Path | None:
    """The cache directory named by ``$WH_CACHE_DIR``, if set."""
    value = os.environ.get(CACHE_DIR_ENV)
    return Path(value) if value else None


@final
class RandomWords(BaseModel):
    """Random word generator settings."""
    lengths: list[int]
    samples: int = 20
    seed: int = 0


@final
class ExperimentConfig(BaseModel):
    """
    A census run.

    :Example:

    >>> cfg = ExperimentConfig.model_validate({"rank": 2, "words": ["aabbb"]})
    >>> cfg.rank, cfg.words, cfg.max_degree
    (2, ['aabbb'], None)
    >>> ExperimentConfig(rank=7)  # doctest: +ELLIPSIS
    Traceback (most recent call last):
    ...
    rberga06.orbits.errors.RankGuardError: ...
    """
    rank: int
    words: list[str] = []
    random: RandomWords | None = None
    max_degree: int | None = None
    cache_dir: Path | None = None
    output: Path | None = None
    override_rank_guard: bool = False
    auto_minimize: bool = False

    @model_validator(mode="after")
    def _check_rank(self) -> Self:
        if self.rank > RANK_GUARD and not self.override_rank_guard:
            raise RankGuardError(self.rank, RANK_GUARD)
        if self.cache_dir is None:
            self.cache_dir = default_cache_dir()
        return self

    @classmethod
    def read(cls, file: FilePath) -> Self:
        """Read a YAML experiment file."""
        data = yaml.load(file.read_text("utf-8"), yaml.SafeLoader) or {}
        return cls.model_validate(data)


__all__ = ["CACHE_DIR_ENV", "default_cache_dir", "RandomWords", "ExperimentConfig"]
