#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Test `rberga06.orbits.types`"""
from __future__ import annotations
import packaging.version
from pydantic import BaseModel, ValidationError
import pytest
from rberga06.orbits.__about__ import __about__, __version__
from rberga06.orbits.types import *
from rberga06.orbits.words import CyclicWord
from .testutils import Feat


Feat.OTHER.required()


class TestLetters:
    def test_order(self) -> None:
        assert sorted_letters([3, -1, 2, 1, -3, -2]) == [1, -1, 2, -2, 3, -3]
        assert [letter_key(x) for x in (1, -1, 2, -2)] == [2, 3, 4, 5]

    @pytest.mark.parametrize("x,char,label", (
        (1, "a", "x1"),
        (-1, "A", "x1'"),
        (4, "d", "x4"),
        (-26, "Z", "x26'"),
    ))
    def test_spelling(self, x: int, char: str, label: str) -> None:
        assert letter_char(x) == char
        assert letter_label(x) == label

    def test_no_char(self) -> None:
        with pytest.raises(ValueError):
            letter_char(27)
        assert letter_label(27) == "x27"

    def test_sets(self) -> None:
        assert pm(2) == {2, -2}
        assert one_sided(frozenset({2, 3, -3})) == {2}
        assert one_sided(frozenset()) == frozenset()


class TestVersion:
    def test_pydantic(self) -> None:
        class Meta(BaseModel):
            version: Version

        assert Meta(version="1.2.3").version == packaging.version.Version("1.2.3")
        assert isinstance(Meta(version=packaging.version.Version("0.1")).version, Version)
        assert Meta(version="0.1.0").model_dump_json() == '{"version":"0.1.0"}'
        with pytest.raises(ValidationError):
            Meta(version="not a version")

    @pytest.mark.parametrize("a,b,ok", (
        ("0.1.0", "0.1.0.dev1", True),
        ("0.1.0", "0.1.5", True),
        ("0.1.0", "0.2.0", False),
        ("1.1.0", "0.1.0", False),
    ))
    def test_compatible(self, a: str, b: str, ok: bool) -> None:
        assert Version(a).compatible(b) is ok


class TestCyclicWordField:
    def test_model(self) -> None:
        class Record(BaseModel):
            word: CyclicWord

        assert Record(word="baa").word == CyclicWord([1, 1, 2], 2)
        assert Record(word=[2, -1]).word.letters == (-1, 2)
        assert Record(word="abAB").model_dump_json() == '{"word":"abAB"}'


class TestAbout:
    def test_version(self) -> None:
        assert __about__.name == "rberga06-orbits" and __about__.pkg == "rberga06.orbits"
        assert __version__ == __about__.version
        assert Version(__version__).compatible(__version__)
