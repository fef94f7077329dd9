#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# mypy: ignore-errors
"""Distribution metadata access."""
from dataclasses import dataclass
import importlib.metadata


@dataclass(frozen=True, slots=True)
class about:
    """Distribution metadata access."""

    name: str
    """The distribution's name."""
    pkg: str
    """The distribution's root package."""

    @property
    def version(self) -> str:
        """The installed version (``0.0.0`` in a source tree that was never installed)."""
        try:
            return importlib.metadata.version(self.name)
        except importlib.metadata.PackageNotFoundError:
            return "0.0.0"


__all__ = [
    "about",
]
