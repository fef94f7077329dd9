#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Test `rberga06.orbits.experiments`."""
from __future__ import annotations
import json
import pytest
from rberga06.orbits.config import ExperimentConfig, RandomWords
from rberga06.orbits.errors import NotMinimalError
from rberga06.orbits.experiments import *
from rberga06.orbits.orbits import is_minimal, level_set
from rberga06.orbits.reports import GrowthReport
from rberga06.orbits.words import parse_word
from .testutils import Feat

Feat.OTHER.required()


class TestCensus:
    def test_record(self) -> None:
        u = parse_word("aabbb", 2)
        record = census(u)
        assert (record.n, record.u, record.letters, record.length) == (2, "aabbb", [1, 1, 2, 2, 2], 5)
        assert record.N == level_set(u).count
        assert len(record.N_k) == 2 and record.N_k[0] >= 1
        assert record.C == 8 and record.bound_ok
        assert record.minimized_from is None
        # 8|u| - 40 is not positive below length 6
        assert record.khan_bound is None and record.khan_bound_ok is None
        assert record.hypotheses.holds and not record.hypotheses.witnesses
        assert findings(record) == []

    def test_khan(self) -> None:
        record = census(parse_word("aabbbb", 2))
        assert record.khan_bound == khan_bound(6) == 8
        assert record.khan_bound_ok == (record.N <= 8)

    def test_not_minimal(self) -> None:
        with pytest.raises(NotMinimalError):
            census(parse_word("aab", 2))

    def test_auto_minimize(self) -> None:
        record = census(parse_word("aab", 2), auto_minimize=True)
        assert record.minimized_from == [1, 1, 2]
        assert record.length == 1 and record.N == 4

    def test_failed_hypothesis(self) -> None:
        record = census(parse_word("abAB", 2))
        assert record.hypotheses.hyp_1_1_ii is False
        assert "abAB: hyp_1_1_ii fails" in findings(record)

    def test_json(self) -> None:
        data = json.loads(census(parse_word("aabbb", 2)).model_dump_json())
        assert data["u"] == "aabbb" and data["hypotheses"]["hyp_1_1_i"] is True


class TestHelpers:
    @pytest.mark.parametrize("length,bound", ((6, 8), (7, 16), (14, 72)))
    def test_khan_bound(self, length: int, bound: int) -> None:
        assert khan_bound(length) == bound

    def test_satisfies_hyp_1_1(self) -> None:
        assert satisfies_hyp_1_1(parse_word("aabbbb", 2))
        assert not satisfies_hyp_1_1(parse_word("aaabb", 2))
        assert not satisfies_hyp_1_1(parse_word("abb", 2))

    def test_config_words(self) -> None:
        config = ExperimentConfig(rank=2, words=["aabbb", "x1 x2 x1' x2'"], random=RandomWords(lengths=[5], samples=2, seed=3))
        words = config_words(config)
        assert [w.text for w in words[:2]] == ["aabbb", "abAB"]
        assert len(words) == 4
        assert all(len(w) == 5 and is_minimal(w) for w in words[2:])
        assert config_words(config) == words


class TestCensusMany:
    def test_report(self) -> None:
        report = census_many(ExperimentConfig(rank=2, words=["aabbb", "abAB"]))
        assert [r.u for r in report.records] == ["aabbb", "abAB"]
        assert report.findings and all(f.startswith("abAB: ") for f in report.findings)
        assert json.loads(report.dumps())["schema"] == 1

    def test_empty(self) -> None:
        report = census_many(ExperimentConfig(rank=2))
        assert report.records == [] and report.findings == []


class TestGrowth:
    def test_no_lengths(self) -> None:
        report = growth(2, [], 5, 0)
        assert report.rows == []
        assert report.to_csv() == "length,sampled,max_N,argmax\n"
        assert report.polynomial_degree == 3

    def test_rows(self) -> None:
        report = growth(2, [5, 6], 3, 0)
        assert [row.length for row in report.rows] == [5, 6]
        for row in report.rows:
            assert 1 <= row.sampled <= 3
            assert row.max_N == level_set(parse_word(str(row.argmax), 2)).count
        assert len(report.to_csv().splitlines()) == 3

    def test_deterministic(self) -> None:
        a, b = growth(2, [6], 4, 11), growth(2, [6], 4, 11)
        assert a.dumps() == b.dumps()
        assert GrowthReport.model_validate_json(a.dumps()) == a
