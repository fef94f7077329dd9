#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""On-disk level-set cache: one JSON-lines file per set, keyed by rank and base word."""
from __future__ import annotations
import hashlib
import json
import logging
from pathlib import Path
from typing_extensions import TYPE_CHECKING, Literal, final, override
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from .__about__ import __version__
from .errors import RankError
from .types import Version
from .words import Alphabet, CyclicWord

if TYPE_CHECKING:
    from .orbits import LevelSet


_log = logging.getLogger(__name__)


@final
class CacheMeta(BaseModel):
    """Sidecar written after both word files; its presence marks a complete entry."""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: Literal[1] = Field(1, alias="schema")
    version: Version
    rank: int
    base: list[int]
    core: int
    members: int


def _digest(letters: tuple[int, ...], /) -> str:
    return hashlib.sha256(json.dumps(list(letters)).encode()).hexdigest()[:20]


def _write_words(path: Path, words: list[CyclicWord], /) -> None:
    path.write_text("".join(json.dumps(w.to_json()) + "\n" for w in words), "utf-8")


def _read_words(path: Path, alphabet: Alphabet, /) -> frozenset[CyclicWord]:
    with path.open(encoding="utf-8") as f:
        return frozenset(CyclicWord(json.loads(line), alphabet) for line in f if line.strip())


@final
class LevelSetStore:
    """
    A directory of cached level sets.

    Entries written by a version with another major/minor release are ignored.
    Sets are written sorted, so files are byte-identical across runs.
    """
    __slots__ = ("root",)

    root: Path

    def __init__(self, root: Path | str, /) -> None:
        self.root = Path(root)

    def _stem(self, base: CyclicWord, /) -> Path:
        return self.root / f"rank-{base.rank}" / _digest(base.letters)

    def paths(self, base: CyclicWord, /) -> tuple[Path, Path, Path]:
        """The core, members and meta files of ``base``."""
        stem = self._stem(base)
        return (
            stem.with_name(stem.name + ".core.jsonl"),
            stem.with_name(stem.name + ".members.jsonl"),
            stem.with_name(stem.name + ".meta.json"),
        )

    def load(self, base: CyclicWord, /) -> tuple[frozenset[CyclicWord], frozenset[CyclicWord]] | None:
        """``(core, members)`` of ``base``, or ``None`` on a miss."""
        core_path, members_path, meta_path = self.paths(base)
        if not meta_path.is_file():
            return None
        try:
            meta = CacheMeta.model_validate_json(meta_path.read_text("utf-8"))
        except ValidationError:
            _log.warning(f"Ignoring malformed cache entry {meta_path}")
            return None
        if not meta.version.compatible(__version__):
            _log.info(f"Ignoring cache entry {meta_path} written by version {meta.version}")
            return None
        if meta.base != list(base.letters) or meta.rank != base.rank:
            _log.warning(f"Cache entry {meta_path} belongs to another word")
            return None
        try:
            core = _read_words(core_path, base.alphabet)
            members = _read_words(members_path, base.alphabet)
        except (OSError, ValueError, RankError) as err:
            _log.warning(f"Cache entry {meta_path} is unreadable: {err}")
            return None
        if (len(core), len(members)) != (meta.core, meta.members):
            _log.warning(f"Cache entry {meta_path} is truncated")
            return None
        _log.debug(f"Cache hit for {base}: {len(members)} members")
        return core, members

    def save(self, ls: LevelSet, /) -> None:
        """Write ``ls`` under its base word."""
        core_path, members_path, meta_path = self.paths(ls.base)
        core_path.parent.mkdir(parents=True, exist_ok=True)
        _write_words(core_path, ls.sorted_core())
        _write_words(members_path, ls.sorted_members())
        meta = CacheMeta(
            version=Version(__version__), rank=ls.base.rank,
            base=list(ls.base.letters), core=len(ls.core), members=len(ls.members),
        )
        meta_path.write_text(meta.model_dump_json(by_alias=True, indent=2), "utf-8")
        _log.debug(f"Cached {ls.count} members of N({ls.base}) in {meta_path.parent}")

    @override
    def __repr__(self) -> str:
        return f"LevelSetStore({str(self.root)!r})"


__all__ = ["CacheMeta", "LevelSetStore"]
