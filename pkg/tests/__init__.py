#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for `rberga06.orbits`."""
