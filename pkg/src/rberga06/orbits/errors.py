#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Errors raised by :py:mod:`rberga06.orbits`."""
from __future__ import annotations
from textwrap import dedent
from typing_extensions import TYPE_CHECKING, Any, ClassVar, Self, override

if TYPE_CHECKING:
    from .moves import WhiteheadW2
    from .words import CyclicWord


class WhiteheadError(RuntimeError):
    """Base class for all errors of this package."""
    exit_code: ClassVar[int] = 2

    @classmethod
    def mk(cls, err: "WhiteheadError | Any", *args: Any) -> Self:
        return err if isinstance(err, cls) else cls(err, *args)


### Input errors ###

class InputError(WhiteheadError):
    """The input cannot be processed."""


class WordSyntaxError(InputError):
    """Bad token in a word's spelling."""
    args: tuple[str, int, str]

    def __init__(self, text: str, position: int, reason: str = "unexpected character", /) -> None:
        super().__init__(text, position, reason)

    @override
    def __str__(self) -> str:
        text, position, reason = self.args
        return dedent(f"""\
            Cannot parse word {text!r}: {reason} at position {position}.
              {text}
              {" " * position}^\
        """)


class RankError(InputError):
    """A letter lies outside the ambient alphabet, or two alphabets disagree."""


class RankGuardError(InputError):
    """Exhaustive enumeration was requested above the rank guard."""
    args: tuple[int, int]

    def __init__(self, rank: int, limit: int, /) -> None:
        super().__init__(rank, limit)

    @override
    def __str__(self) -> str:
        rank, limit = self.args
        return dedent(f"""\
            Refusing to enumerate Whitehead automorphisms of rank {rank} (limit: {limit}).
            Pass `override=True` (or `--override-rank-guard` on the command line) to proceed anyway.\
        """)


class EmptyWordError(InputError):
    """The operation is undefined on the empty word."""


class NoLowLetterError(InputError):
    """The word has no letter of index at most ``k``."""


class SamplingError(InputError):
    """No acceptable word was found within the sampling budget."""


class NotMinimalError(InputError):
    """The word is not of minimum length in its orbit."""
    args: tuple["CyclicWord", "WhiteheadW2", int]

    def __init__(self, word: "CyclicWord", move: "WhiteheadW2", delta: int, /) -> None:
        super().__init__(word, move, delta)

    @property
    def word(self) -> "CyclicWord":
        return self.args[0]

    @property
    def move(self) -> "WhiteheadW2":
        return self.args[1]

    @override
    def __str__(self) -> str:
        word, move, delta = self.args
        return f"Word {word} is not minimal: {move} changes its length by {delta}."


### Move errors ###

class MoveError(WhiteheadError):
    """An automorphism is malformed for the requested operation."""


class MultiplierError(MoveError):
    """The multiplier is not allowed here."""


class DegreeMismatchError(MoveError):
    """The automorphism has the wrong degree."""


class RestrictionError(MoveError):
    """A restricted automorphism violates its restrictions."""


### Logic errors ###

class PreconditionError(WhiteheadError):
    """The inputs do not meet the operation's preconditions."""


class ContradictionError(WhiteheadError):
    """An internal consistency check failed; the inputs violate a standing hypothesis."""
    exit_code: ClassVar[int] = 1


__all__ = [
    "WhiteheadError",
    "InputError", "WordSyntaxError", "RankError", "RankGuardError",
    "EmptyWordError", "NoLowLetterError", "SamplingError", "NotMinimalError",
    "MoveError", "MultiplierError", "DegreeMismatchError", "RestrictionError",
    "PreconditionError", "ContradictionError",
]
