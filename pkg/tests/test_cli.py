#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Test `rberga06.orbits.cli`."""
from __future__ import annotations
import json
from pathlib import Path
from click.testing import CliRunner
import pytest
from rberga06.orbits.__about__ import __version__
from rberga06.orbits.cli import *
from .testutils import Feat

Feat.CLI.required()


def wh(*args: str):
    return CliRunner().invoke(main, list(args))


class TestMain:
    def test_version(self) -> None:
        result = wh("--version")
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_help(self) -> None:
        result = wh("--help")
        assert result.exit_code == 0
        for command in ("minimize", "census", "growth", "verify", "depgraph", "lift"):
            assert command in result.output


class TestMinimize:
    def test_primitive(self) -> None:
        result = wh("minimize", "bA", "--rank", "2")
        assert result.exit_code == 0
        word, chain = result.output.splitlines()[:2]
        assert len(word) == 1 and chain.startswith("chain: ")

    def test_minimal(self) -> None:
        result = wh("minimize", "abAB", "--rank", "2")
        assert result.exit_code == 0
        assert result.output.splitlines()[:2] == ["abAB", "minimal"]

    def test_empty(self) -> None:
        result = wh("minimize", "aA", "--rank", "2")
        assert result.exit_code == 0
        assert "(empty)" in result.output

    def test_json(self) -> None:
        result = wh("minimize", "abAB", "--rank", "2", "--json")
        data = json.loads(result.output)
        assert data["minimal"] and data["word"] == [1, 2, -1, -2]

    def test_word_option(self) -> None:
        flag = wh("minimize", "--word", "aab", "--rank", "2")
        assert flag.exit_code == 0
        assert flag.output == wh("minimize", "aab", "--rank", "2").output
        assert wh("minimize", "aab", "--word", "aab", "--rank", "2").exit_code == 0

    def test_word_missing_or_ambiguous(self) -> None:
        assert wh("minimize", "--rank", "2").exit_code == 2
        result = wh("minimize", "aab", "--word", "abAB", "--rank", "2")
        assert result.exit_code == 2
        assert "two different words" in result.output

    @pytest.mark.parametrize("args", (
        ("ab1", "--rank", "2"),
        ("abc", "--rank", "2"),
        ("ab", "--rank", "7"),
    ))
    def test_input_errors(self, args: tuple[str, ...]) -> None:
        result = wh("minimize", *args)
        assert result.exit_code == 2
        assert "Error: " in result.output


class TestCensus:
    def test_word(self) -> None:
        result = wh("census", "--rank", "2", "--word", "aabbb")
        assert result.exit_code == 0
        line = result.output.splitlines()[0]
        assert line.startswith("aabbb: |u|=5 N=")
        assert "product=ok" in line and line.endswith("hypotheses=ok")

    def test_findings(self) -> None:
        result = wh("census", "--rank", "2", "--word", "abAB")
        assert result.exit_code == 0
        assert "finding: abAB: hyp_1_1_ii fails" in result.output

    def test_not_minimal(self) -> None:
        assert wh("census", "--rank", "2", "--word", "aab").exit_code == 2
        result = wh("census", "--rank", "2", "--word", "aab", "--auto-minimize")
        assert result.exit_code == 0

    def test_usage(self) -> None:
        assert wh("census", "--word", "aabbb").exit_code == 2

    def test_config(self, tmp_path: Path) -> None:
        out = tmp_path / "report.json"
        file = tmp_path / "experiment.yaml"
        file.write_text(f"rank: 2\nwords: [aabbb]\ncache_dir: {tmp_path / 'cache'}\noutput: {out}\n", "utf-8")
        result = wh("census", "--config", str(file), "--json")
        assert result.exit_code == 0
        data = json.loads(out.read_text("utf-8"))
        assert data["schema"] == 1 and data["records"][0]["u"] == "aabbb"
        assert (tmp_path / "cache" / "rank-2").is_dir()

    def test_bad_config(self, tmp_path: Path) -> None:
        file = tmp_path / "experiment.yaml"
        file.write_text("rank: seven\n", "utf-8")
        result = wh("census", "--config", str(file))
        assert result.exit_code == 2
        assert "invalid configuration" in result.output


class TestGrowth:
    def test_empty(self) -> None:
        result = wh("growth", "--rank", "2", "--lengths", "6..5")
        assert result.exit_code == 0
        assert result.output == "length,sampled,max_N,argmax\n"

    def test_json(self) -> None:
        result = wh("growth", "--rank", "2", "--lengths", "6", "--samples", "2", "--json")
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert [row["length"] for row in rows] == [6]

    def test_bad_lengths(self) -> None:
        assert wh("growth", "--rank", "2", "--lengths", "six").exit_code == 2


class TestVerify:
    def test_formula(self) -> None:
        result = wh("verify", "formula", "--seed", "3")
        assert result.exit_code == 0
        assert result.output.startswith("formula: passed (")

    def test_unknown_suite(self) -> None:
        assert wh("verify", "nonsense").exit_code == 2


class TestDepgraph:
    def test_text(self) -> None:
        result = wh("depgraph", "aabbb", "--rank", "2")
        assert result.exit_code == 0
        assert result.output.strip() == "1 components: C_1=C_2"

    def test_word_option(self) -> None:
        result = wh("depgraph", "--word", "aabbb", "--rank", "2")
        assert result.exit_code == 0
        assert result.output.strip() == "1 components: C_1=C_2"
        assert wh("depgraph", "--rank", "2").exit_code == 2

    def test_dot(self) -> None:
        result = wh("depgraph", "aabbb", "--rank", "2", "--dot")
        assert result.exit_code == 0
        assert "graph dependence {" in result.output

    def test_not_minimal(self) -> None:
        assert wh("depgraph", "aab", "--rank", "2").exit_code == 2


class TestLift:
    def test_text(self) -> None:
        result = wh("lift", "abaB", "--rank", "2")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "factors: x1 x2 | x1 x2'"
        assert [line.split("\t")[0] for line in lines[1:3]] == ["abgB", "aBgb"]
        assert lines[-1] == "total length 8"

    def test_word_option(self) -> None:
        result = wh("lift", "--word", "abaB", "--rank", "2")
        assert result.exit_code == 0
        assert result.output == wh("lift", "abaB", "--rank", "2").output

    def test_json(self) -> None:
        data = json.loads(wh("lift", "abaB", "--rank", "2", "--json").output)
        assert data["words"] == [[1, 2, 7, -2], [1, -2, 7, 2]] and len(data["rules"]) == 2

    def test_no_low_letter(self) -> None:
        assert wh("lift", "bbb", "--rank", "2").exit_code == 2
