#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Test `rberga06.orbits.moves`."""
from __future__ import annotations
from hypothesis import given, settings, strategies as st
import pytest
from rberga06.orbits.errors import MultiplierError, RankError, RankGuardError
from rberga06.orbits.moves import *
from rberga06.orbits.words import Alphabet, CyclicWord, WordTuple
from .testutils import Feat

Feat.MOVES.required()


def words(rank: int, max_size: int = 14) -> st.SearchStrategy[CyclicWord]:
    alphabet = Alphabet.of_rank(rank)
    return st.lists(st.sampled_from(alphabet.letters), max_size=max_size).map(lambda w: CyclicWord(w, alphabet))


def w2_moves(rank: int) -> st.SearchStrategy[WhiteheadW2]:
    return st.sampled_from(list(enumerate_w2(rank)))


class TestW2:
    def test_validation(self) -> None:
        assert WhiteheadW2([], 1, 2).degree == 0
        with pytest.raises(MultiplierError):
            WhiteheadW2([1], 1, 2)
        with pytest.raises(MultiplierError):
            WhiteheadW2([-1, 2], 1, 2)
        with pytest.raises(RankError):
            WhiteheadW2([3], 1, 2)

    def test_image(self) -> None:
        s = WhiteheadW2([2, -2], 1, 2)
        assert s.image(2) == (-1, 2, 1)
        assert s.image(-2) == (-1, -2, 1)
        assert s.image(1) == (1,)
        t = WhiteheadW2([1], 2, 2)
        assert t.image(1) == (1, 2)
        assert t.image(-1) == (-2, -1)

    @pytest.mark.parametrize("A,a,rank,degree", (
        ([2, 3, -3], -1, 3, 2),
        ([2, -2], 1, 2, 0),
        ([1], 2, 2, 1),
        ([1, 2, -2, 3], 4, 4, 3),
    ))
    def test_degree(self, A: list[int], a: int, rank: int, degree: int) -> None:
        assert WhiteheadW2(A, a, rank).degree == degree

    def test_complement(self) -> None:
        assert complement(WhiteheadW2([2], 1, 2)) == WhiteheadW2([-2], -1, 2)
        assert complement(WhiteheadW2([], 1, 2)) == WhiteheadW2([2, -2], -1, 2)

    @pytest.mark.parametrize("rank", (2, 3))
    def test_complement_degree(self, rank: int) -> None:
        for s in enumerate_w2(rank):
            assert degree(complement(s)) == degree(s), s

    def test_equality(self) -> None:
        assert WhiteheadW2([2], 1, 2) == WhiteheadW2([2], 1, 2)
        assert WhiteheadW2([2], 1, 2) != WhiteheadW2([2], 1, 3)
        assert len({WhiteheadW2([2], 1, 2), WhiteheadW2([2], 1, 2)}) == 1


class TestAction:
    @pytest.mark.parametrize("A,a,w,image", (
        ([2], 1, [2, -1], (2,)),
        ([], 1, [1, 2, -1, -2], (1, 2, -1, -2)),
        ([1], 2, [1, 2], (1, 2, 2)),
    ))
    def test_apply_w2(self, A: list[int], a: int, w: list[int], image: tuple[int, ...]) -> None:
        assert apply_w2(WhiteheadW2(A, a, 2), CyclicWord(w, 2)).letters == image

    def test_apply_w1(self) -> None:
        swap = WhiteheadW1([2, 1], 2)
        assert apply_w1(swap, CyclicWord([1, 1, 2], 2)) == CyclicWord([2, 2, 1], 2)
        assert apply_w1(WhiteheadW1([-1], 1), CyclicWord([1], 1)).letters == (-1,)
        assert apply(swap, CyclicWord([1], 2)).letters == (2,)

    def test_alphabet_mismatch(self) -> None:
        with pytest.raises(RankError):
            apply_w2(WhiteheadW2([], 1, 2), CyclicWord([1], 3))

    def test_tuples(self) -> None:
        alphabet = Alphabet.of_rank(2)
        t = WordTuple([CyclicWord([1, 2], alphabet), CyclicWord([1], alphabet)])
        s = WhiteheadW2([1], 2, alphabet)
        image = apply_w2(s, t)
        assert [w.letters for w in image] == [(1, 2, 2), (1, 2)]
        assert length_delta(s, t) == len(image) - len(t) == 2
        assert list(enumerate_w2(alphabet).deltas(t)) == [length_delta(m, t) for m in enumerate_w2(alphabet)]


class TestLengthFormula:
    def test_examples(self) -> None:
        assert length_delta(WhiteheadW2([2], 1, 2), CyclicWord([2, -1], 2)) == -1
        assert length_delta(WhiteheadW2([1], 2, 2), CyclicWord([1, 2], 2)) == 1

    @settings(max_examples=200)
    @given(st.data())
    def test_formula(self, data: st.DataObject) -> None:
        rank = data.draw(st.integers(1, 3))
        w = data.draw(words(rank))
        s = data.draw(w2_moves(rank))
        assert length_delta(s, w) == len(apply_w2(s, w)) - len(w)

    @given(words(2), w2_moves(2))
    def test_identity_multiplier(self, w: CyclicWord, s: WhiteheadW2) -> None:
        if not s.A:
            assert length_delta(s, w) == 0
            assert apply_w2(s, w) == w

    @settings(max_examples=200)
    @given(st.data())
    def test_complement(self, data: st.DataObject) -> None:
        rank = data.draw(st.integers(1, 3))
        w = data.draw(words(rank))
        s = data.draw(w2_moves(rank))
        assert apply_w2(complement(s), w) == apply_w2(s, w)
        assert complement(complement(s)) == s

    @given(words(3))
    def test_vectorized(self, w: CyclicWord) -> None:
        moves = enumerate_w2(3)
        assert [int(d) for d in moves.deltas(w)] == [length_delta(m, w) for m in moves]
        assert all(length_delta(m, w) == 0 for m in moves.preserving(w))


class TestEnumeration:
    @pytest.mark.parametrize("rank,w2,w1", ((1, 2, 2), (2, 16, 8), (3, 96, 48)))
    def test_counts(self, rank: int, w2: int, w1: int) -> None:
        assert len(enumerate_w2(rank)) == w2
        assert len(enumerate_w1(rank)) == w1

    def test_order(self) -> None:
        moves = list(enumerate_w2(2))
        assert [m.a for m in moves[::4]] == [1, -1, 2, -2]
        assert len(set(moves)) == len(moves)
        assert enumerate_w1(2)[0].is_identity

    def test_degree_filter(self) -> None:
        everything = list(enumerate_w2(3))
        for k in range(3):
            restricted = list(enumerate_w2(3, degree=k))
            assert restricted == [m for m in everything if m.degree == k]
        assert sum(len(enumerate_w2(3, degree=k)) for k in range(4)) == 96

    def test_guard(self) -> None:
        with pytest.raises(RankGuardError) as exc:
            enumerate_w2(7)
        assert "--override-rank-guard" in str(exc.value)
        with pytest.raises(RankGuardError):
            enumerate_w1(7)

    def test_first_reducing(self) -> None:
        hit = enumerate_w2(2).first_reducing(CyclicWord([2, -1], 2))
        assert hit is not None and hit[1] < 0
        assert enumerate_w2(2).first_reducing(CyclicWord([1, 2, -1, -2], 2)) is None
