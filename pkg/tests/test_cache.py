#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Test `rberga06.orbits.cache`."""
from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from typing_extensions import NoReturn
import pytest
from rberga06.orbits.cache import *
from rberga06.orbits.errors import RankGuardError
from rberga06.orbits.moves import enumerate_w1, enumerate_w2
from rberga06.orbits.words import Alphabet
from .testutils import Feat

Feat.OTHER.required()


class TestMemo:
    def test_recursion(self) -> None:
        calls: list[int] = []

        @func
        def factorial(x: int, /) -> int:
            calls.append(x)
            return 1 if x == 0 else x * factorial(x - 1)

        assert factorial(3) == 6
        assert factorial(2) == 2
        assert calls == [3, 2, 1, 0]
        m = memo(factorial)
        assert m.positional
        assert m.info == MemoInfo(hits=1, misses=4, size=4)
        assert m.entries[(2,)] == (2, False)
        clear(factorial)
        assert m.info == MemoInfo(0, 0, 0)

    def test_exceptions(self) -> None:
        @func
        def bad() -> NoReturn:
            raise RuntimeError("bad")

        with pytest.raises(RuntimeError) as first:
            bad()
        with pytest.raises(RuntimeError) as second:
            bad()
        assert first.value is second.value
        assert memo(bad).info.hits == 1

    def test_keywords(self) -> None:
        @func
        def scale(x: int, *, by: int = 2) -> int:
            return x * by

        assert not memo(scale).positional
        assert scale(3) == 6 and scale(3, by=3) == 9
        assert memo(scale).info.size == 2

    def test_forced_positional(self) -> None:
        @func(positional=True)
        def first(x: int, y: int = 0) -> int:
            return x

        assert first(1) == 1
        # keyword arguments are not part of the key
        assert first(1, y=5) == 1 and memo(first).info.hits == 1

    def test_threads(self) -> None:
        @func
        def square(x: int, /) -> int:
            return x * x

        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(square, [i % 4 for i in range(400)]))
        assert results == [(i % 4) ** 2 for i in range(400)]
        info = memo(square).info
        assert info.hits + info.misses == 400 and info.size == 4

    def test_not_memoized(self) -> None:
        with pytest.raises(ValueError):
            memo(len)
        clear(len)
        assert "misses=" in repr(Memo("f"))


class TestMemoizedEnumeration:
    def test_alphabets(self) -> None:
        assert Alphabet.of_rank(3) is Alphabet.of_rank(3)
        assert Alphabet.markers(2, 1) is Alphabet.markers(2, 1)

    def test_moves(self) -> None:
        assert enumerate_w2(2) is enumerate_w2(2)
        assert enumerate_w2(2, degree=1) is not enumerate_w2(2)
        assert enumerate_w1(3) is enumerate_w1(3)

    def test_guard(self) -> None:
        with pytest.raises(RankGuardError) as first:
            enumerate_w2(8)
        with pytest.raises(RankGuardError) as second:
            enumerate_w2(8)
        assert first.value is second.value
