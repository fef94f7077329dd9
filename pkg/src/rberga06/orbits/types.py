#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Letters, letter sets and pydantic-aware helper types."""
from __future__ import annotations
from collections.abc import Iterable
from typing import TypeAlias
from typing_extensions import Any, Protocol, Self, TypeVar, override
import packaging.version
from pydantic_core import core_schema


Letter: TypeAlias = int
"""A signed generator index: ``i`` is :math:`x_i`, ``-i`` is :math:`x_i^{-1}`."""
LetterSet: TypeAlias = frozenset[int]
Degree: TypeAlias = int


def letter_key(x: Letter, /) -> int:
    """
    Sort key realizing the letter order :math:`x_1 < x_1^{-1} < x_2 < x_2^{-1} < \\dots`.

    >>> sorted([-2, 2, -1, 1], key=letter_key)
    [1, -1, 2, -2]
    """
    return 2 * x if x > 0 else -2 * x + 1


def sorted_letters(letters: Iterable[Letter], /) -> list[Letter]:
    """Sort ``letters`` in letter order."""
    return sorted(letters, key=letter_key)


def letter_char(x: Letter, /) -> str:
    """
    One-character spelling (``a``-``z`` for :math:`x_1..x_{26}`, uppercase for inverses).

    >>> letter_char(1), letter_char(-2), letter_char(26)
    ('a', 'B', 'z')
    """
    i = abs(x)
    if not 1 <= i <= 26:
        raise ValueError(f"Letter {x} has no one-character spelling.")
    return chr((ord("a") if x > 0 else ord("A")) + i - 1)


def letter_label(x: Letter, /) -> str:
    """
    Indexed spelling, with a prime for inverses.

    >>> letter_label(7), letter_label(-1)
    ('x7', "x1'")
    """
    return f"x{abs(x)}" if x > 0 else f"x{abs(x)}'"


def pm(*generators: int) -> LetterSet:
    """
    Both signs of each generator.

    >>> sorted_letters(pm(1, 3))
    [1, -1, 3, -3]
    """
    return frozenset(s * abs(i) for i in generators for s in (1, -1))


def one_sided(letters: LetterSet, /) -> LetterSet:
    """Letters of ``letters`` whose inverse is missing."""
    return frozenset(x for x in letters if -x not in letters)


_T = TypeVar("_T", infer_variance=True)


class SupportsPydanticV2(Protocol[_T]):
    """
    A :py:class:`typing.Protocol` that makes it easy to implement :py:mod:`pydantic` v2 support.

    Implementors provide :py:meth:`validate`; values are serialized through :py:class:`str`.

    :Example:

    >>> class Gen(SupportsPydanticV2[Any]):
    ...     def __init__(self, index: int, /) -> None:
    ...         self.index = index
    ...
    ...     @override
    ...     def __str__(self) -> str:
    ...         return letter_label(self.index)
    ...
    ...     @classmethod
    ...     @override
    ...     def validate(cls, /, value: Any) -> Self:
    ...         return value if isinstance(value, cls) else cls(int(str(value).lstrip("x")))
    ...
    >>> class Model(pydantic.BaseModel):
    ...     gen: Gen
    ...
    >>> Model(gen="x3").gen.index
    3
    >>> Model(gen=3).model_dump_json()
    '{"gen":"x3"}'
    """

    @classmethod
    def validate(cls, obj: _T, /) -> Self:
        """
        Instantiate this class from :py:obj:`obj`.
        """
        ...

    @classmethod
    def __get_pydantic_core_schema__(cls, *args: Any, **kwargs: Any) -> core_schema.PlainValidatorFunctionSchema:
        """Provides a :py:mod:`pydantic_core` schema. Implements :py:mod:`pydantic` v2 support."""
        # See https://github.com/pydantic/pydantic/issues/5373
        return core_schema.no_info_plain_validator_function(
            lambda _: cls.validate(_), serialization=core_schema.to_string_ser_schema()
        )



class Version(packaging.version.Version, SupportsPydanticV2["Version | packaging.version.Version | str"]):
    """
    A :py:mod:`pydantic` v2-compatible :class:`packaging.version.Version` subclass.

    Used to tag persisted level sets with the version that produced them.

    :Example:

    >>> class Meta(pydantic.BaseModel):
    ...     version: Version
    ...
    >>> Meta(version="0.1.0").version.release
    (0, 1, 0)
    >>> Meta.model_validate(dict(version=packaging.version.Version("0.1.2"))).version.minor
    1
    >>> Version("0.1.0").compatible(Version("0.1.7")), Version("0.1.0").compatible("0.2.0")
    (True, False)
    """

    @classmethod
    @override
    def validate(cls, obj: Version | packaging.version.Version | str, /) -> Self:
        if isinstance(obj, cls):
            return obj
        elif isinstance(obj, packaging.version.Version):
            return cls(str(obj))
        else:
            return cls(obj)

    def compatible(self, other: Version | packaging.version.Version | str, /) -> bool:
        """Same major and minor release."""
        other = Version.validate(other)
        return (self.major, self.minor) == (other.major, other.minor)


__all__ = [
    "Letter", "LetterSet", "Degree",
    "letter_key", "sorted_letters", "letter_char", "letter_label",
    "pm", "one_sided",
    "SupportsPydanticV2",
    "Version",
]
