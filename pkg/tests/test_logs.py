#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Test `rberga06.orbits.logs`."""
from __future__ import annotations
import logging
import pytest
from rberga06.orbits.logs import *
from .testutils import Feat

Feat.OTHER.required()


@traced
def _half(x: int) -> int:
    if x % 2:
        raise ValueError(x)
    return x // 2


class TestTraced:
    def test_logger(self) -> None:
        assert logger(_half).name == f"{__name__}:_half"
        assert _half.__name__ == "_half"

    def test_calls(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.DEBUG, logger=logger(_half).name):
            assert _half(4) == 2
        assert [r.getMessage() for r in caplog.records] == [
            f"-> {__name__}:_half(4)",
            f"<- {__name__}:_half(4) = 2",
        ]

    def test_raised(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.DEBUG, logger=logger(_half).name):
            with pytest.raises(ValueError):
                _half(3)
        assert caplog.records[-1].getMessage() == f"<- {__name__}:_half(3) raised ValueError"

    def test_quiet(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.INFO):
            assert _half(8) == 4
        assert not caplog.records
