#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Whitehead orbits of cyclic words"""
from .about import about

__about__ = about("rberga06-orbits", "rberga06.orbits")
__version__ = __about__.version

__all__ = [
    "__about__",
    "__version__",
]
