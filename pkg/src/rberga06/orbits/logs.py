#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Call tracing and logging setup."""
from __future__ import annotations
from collections.abc import Callable, Iterable
from functools import wraps
import logging
import reprlib
from typing import cast
from typing_extensions import Any, TypeVar

_F = TypeVar("_F", bound=Callable[..., Any])

_repr = reprlib.Repr()
_repr.maxstring = 60
_repr.maxother = 60


def _f_full_name(f: Callable[..., Any]) -> str:
    module, qualname = f.__module__, f.__qualname__
    if module == "__main__":  # pragma: no cover
        return qualname
    return f"{module}:{qualname}"


def _desc_f_call(f: Callable[..., Any], args: Iterable[Any], kwargs: Iterable[tuple[str, Any]]) -> str:
    params = [*map(_repr.repr, args), *[f"{k}={_repr.repr(v)}" for k, v in kwargs]]
    return f"{_f_full_name(f)}({', '.join(params)})"


def logger(f: Callable[..., Any], /) -> logging.Logger:
    """The logger dedicated to ``f``."""
    return logging.getLogger(_f_full_name(f))


def traced(f: _F, /) -> _F:
    """
    Log calls to ``f`` (and their outcome) at ``DEBUG`` level on ``f``'s own logger.

    >>> @traced
    ... def twice(x: int) -> int:
    ...     return 2 * x
    >>> twice(21)
    42
    >>> logger(twice).name.endswith(":twice")
    True
    """
    log = logger(f)

    @wraps(f)
    def inner(*args: Any, **kwargs: Any) -> Any:
        if not log.isEnabledFor(logging.DEBUG):
            return f(*args, **kwargs)
        call = _desc_f_call(f, args, kwargs.items())
        log.debug(f"-> {call}")
        try:
            result = f(*args, **kwargs)
        except BaseException as err:
            log.debug(f"<- {call} raised {type(err).__qualname__}")
            raise
        log.debug(f"<- {call} = {_repr.repr(result)}")
        return result
    return cast(_F, inner)


def configure(verbosity: int = 0, /) -> None:
    """Install a stream handler on the root logger, unless it already has one (0: warnings, 1: info, 2+: debug)."""
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


__all__ = [
    "logger",
    "traced",
    "configure",
]
