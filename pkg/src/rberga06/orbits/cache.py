#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""In-process memoization of pure functions (move enumerations, alphabets)."""
from __future__ import annotations
from collections.abc import Callable, Hashable
from functools import wraps
import inspect
import threading
from typing import NamedTuple, cast
from typing_extensions import Any, TypeVar, final, overload, override


_F = TypeVar("_F", bound=Callable[..., object])


class MemoInfo(NamedTuple):
    hits: int
    misses: int
    size: int


@final
class Memo:
    """
    Results *and* raised exceptions of one function, keyed by its frozen arguments.

    ``positional`` memos key on ``args`` alone; the others also freeze ``kwargs``.

    Bookkeeping is guarded by a lock, but the wrapped call runs outside it:
    two threads missing the same key may both compute it (the first result is kept).
    """
    __slots__ = ("name", "positional", "entries", "hits", "misses", "lock")

    name: str
    positional: bool
    entries: dict[Hashable, tuple[object, bool]]
    hits: int
    misses: int
    lock: threading.Lock

    def __init__(self, name: str, /, *, positional: bool = False) -> None:
        self.name = name
        self.positional = positional
        self.entries = {}
        self.hits = self.misses = 0
        self.lock = threading.Lock()

    def key(self, args: tuple[object, ...], kwargs: dict[str, object], /) -> Hashable:
        return args if self.positional else (args, frozenset(kwargs.items()))

    @property
    def info(self) -> MemoInfo:
        with self.lock:
            return MemoInfo(self.hits, self.misses, len(self.entries))

    def clear(self, /) -> None:
        with self.lock:
            self.entries.clear()
            self.hits = self.misses = 0

    def _store(self, key: Hashable, value: object, failed: bool, /) -> tuple[object, bool]:
        with self.lock:
            return self.entries.setdefault(key, (value, failed))

    def wrap(self, f: _F, /) -> _F:
        @wraps(f)
        def inner(*args: object, **kwargs: object) -> object:
            key = self.key(args, kwargs)
            with self.lock:
                entry = self.entries.get(key)
                if entry is not None:
                    self.hits += 1
                else:
                    self.misses += 1
            if entry is None:
                try:
                    entry = self._store(key, f(*args, **kwargs), False)
                except Exception as err:
                    entry = self._store(key, err, True)
            result, failed = entry
            if failed:
                raise cast(BaseException, result)
            return result
        setattr(inner, "__memo__", self)
        return cast(_F, inner)

    @override
    def __repr__(self) -> str:
        return f"<Memo {self.name}: {self.info}>"


def _positional_only(f: Callable[..., Any], /) -> bool:
    kinds = {p.kind for p in inspect.signature(f).parameters.values()}
    return kinds <= {inspect.Parameter.POSITIONAL_ONLY, inspect.Parameter.VAR_POSITIONAL}


def memo(f: Callable[..., Any], /) -> Memo:
    """The :py:class:`Memo` behind a :py:func:`func`-decorated function."""
    m = getattr(f, "__memo__", None)
    if not isinstance(m, Memo):
        raise ValueError(f"{f!r} is not memoized.")
    return m


def clear(f: Callable[..., Any], /) -> None:
    """Forget every call of ``f``, if it is memoized."""
    m = getattr(f, "__memo__", None)
    if isinstance(m, Memo):
        m.clear()


@overload
def func(f: None = ..., /, *, positional: bool | None = ...) -> Callable[[_F], _F]: ...
@overload
def func(f: _F, /) -> _F: ...
def func(f: _F | None = None, /, *, positional: bool | None = None) -> _F | Callable[[_F], _F]:
    """
    Memoize a pure function.

    Functions with positional-only parameters get a memo keyed on ``args`` alone.

    >>> @func
    ... def square(x: int, /) -> int:
    ...     return x * x
    >>> square(3), square(3), memo(square).info
    (9, 9, MemoInfo(hits=1, misses=1, size=1))
    """
    if f is None:
        return lambda g: func(g) if positional is None else Memo(g.__qualname__, positional=positional).wrap(g)
    return Memo(f.__qualname__, positional=_positional_only(f)).wrap(f)


__all__ = [
    "MemoInfo",
    "Memo",
    "memo",
    "clear",
    "func",
]
