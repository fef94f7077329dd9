#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Test `rberga06.orbits.orbits`."""
from __future__ import annotations
import pytest
from rberga06.orbits.errors import NotMinimalError, RankGuardError
from rberga06.orbits.moves import apply_w2, enumerate_w2
from rberga06.orbits.orbits import *
from rberga06.orbits.words import Alphabet, CyclicWord, WordTuple, parse_word
from .testutils import Feat

Feat.ORBITS.required()


class TestMinimize:
    def test_primitive(self) -> None:
        v, chain = minimize(parse_word("bA", 2))
        assert len(v) == 1
        assert len(chain) == 1 and chain(parse_word("bA", 2)) == v

    @pytest.mark.parametrize("text", ("abAB", "a", "aabbb"))
    def test_minimal(self, text: str) -> None:
        u = parse_word(text, 2)
        v, chain = minimize(u)
        assert v == u and not chain.steps
        assert is_minimal(u)

    def test_empty(self) -> None:
        v, chain = minimize(parse_word("aA", 2))
        assert not v and not chain.steps

    def test_deterministic(self) -> None:
        u = parse_word("aabaBBaab", 2)
        assert minimize(u) == minimize(u)
        v, chain = minimize(u)
        assert is_minimal(v)
        assert all(len(b) < len(a) for a, b in zip(chain.trace(u), list(chain.trace(u))[1:]))

    def test_require(self) -> None:
        with pytest.raises(NotMinimalError) as exc:
            require_minimal(parse_word("ab", 2))
        assert exc.value.word == parse_word("ab", 2)
        assert "not minimal" in str(exc.value)


class TestLevelSet:
    @pytest.mark.parametrize("rank", (1, 2, 3))
    def test_letter(self, rank: int) -> None:
        ls = level_set(CyclicWord([1], rank))
        assert ls.count == 2 * rank
        assert {w.letters for w in ls} == {(x,) for x in Alphabet.of_rank(rank).letters}

    def test_commutator(self) -> None:
        ls = level_set(parse_word("abAB", 2))
        assert ls.count == 2
        assert parse_word("aBAb", 2) in ls

    def test_invariants(self) -> None:
        u = parse_word("aabbb", 2)
        ls = level_set(u)
        assert u in ls and ls.core <= ls.members
        assert all(len(v) == len(u) and is_minimal(v) for v in ls)
        assert ls.sorted_members() == sorted(ls.members, key=lambda w: w.key)
        # core is closed under length-preserving W2 moves
        moves = enumerate_w2(2)
        for v in ls.core:
            assert all(apply_w2(m, v) in ls.core for m in moves.preserving(v))

    def test_worked_word(self) -> None:
        # x1 x2 x1^-1 x2^-2: every length-preserving W2 move fixes it,
        # and the 8 signed relabelings give 8 different cyclic words
        u = parse_word("abABB", 2)
        ls = level_set(u)
        assert ls.core == {u}
        assert ls.count == 8
        assert {"aBBAb", "aBAbb", "abbAB", "aBAAb", "abAAB", "aabAB", "aaBAb"} <= {v.text for v in ls}

    @pytest.mark.parametrize("text", ("abAB", "aabbb", "aabbbb", "abABB"))
    def test_any_base(self, text: str) -> None:
        ls = level_set(parse_word(text, 2))
        for v in ls.core:
            other = level_set(v)
            assert other.members == ls.members
            assert other.core == ls.core

    def test_not_minimal(self) -> None:
        with pytest.raises(NotMinimalError):
            level_set(parse_word("aab", 2))

    def test_guard(self) -> None:
        with pytest.raises(RankGuardError):
            level_set(CyclicWord([1], 7))

    def test_closure(self) -> None:
        u = CyclicWord([1, 2], 2)
        moves = enumerate_w2(2, degree=0)
        reached = closure(u, moves)
        assert u in reached
        assert all(len(v) == len(u) for v in reached)


class TestDegreeOrbit:
    def test_letter(self) -> None:
        u = CyclicWord([1], 2)
        assert degree_restricted_orbit(u, 0).count == 1
        assert degree_restricted_orbit(u, 1).count == 1

    def test_contains_base(self) -> None:
        u = parse_word("aabbb", 2)
        for k in range(3):
            orbit = degree_restricted_orbit(u, k)
            assert u in orbit
            assert orbit.members <= level_set(u).core

    def test_above_rank(self) -> None:
        # no length-preserving move of degree >= n on words with increasing counts
        u = parse_word("aabbb", 2)
        assert degree_restricted_orbit(u, 2).members == {u}

    def test_tuple(self) -> None:
        alphabet = Alphabet.of_rank(2)
        t = WordTuple([CyclicWord([1, 2], alphabet), CyclicWord([2], alphabet)])
        orbit = degree_restricted_orbit(t, 0)
        assert t in orbit
        assert all(v.total_length == 3 for v in orbit.members)


class TestBounds:
    def test_letter(self) -> None:
        result = product_bound_check(CyclicWord([1], 2))
        assert result == ProductBound(N=4, N_k=(1, 1), C=8)
        assert result.ok and result.bound == 8

    def test_commutator(self) -> None:
        result = product_bound_check(parse_word("abAB", 2))
        assert result.N == 2 and result.C == 8
        assert result.ok

    @pytest.mark.parametrize("text,rank", (("aabbb", 2), ("aabbbb", 2), ("aabbbcccc", 3)))
    def test_lemma22(self, text: str, rank: int) -> None:
        assert lemma22_violations(parse_word(text, rank)) == []

    def test_lemma22_commutator(self) -> None:
        # equal counts: the multiplier inequality is not strict
        violations = lemma22_violations(parse_word("abAB", 2))
        assert violations
        assert all(v.letter is None or v.multiplier_count <= v.letter_count for v in violations)

    @pytest.mark.parametrize("n,length,bound", ((1, 9, 1), (2, 5, 2), (3, 10, 482)))
    def test_syllable_bound(self, n: int, length: int, bound: int) -> None:
        assert syllable_count_bound(n, length) == bound

    def test_polynomial_degree(self) -> None:
        assert [polynomial_degree(n) for n in (2, 3, 4)] == [3, 12, 26]
