#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Experiment drivers: per-word census records and growth tables."""
from __future__ import annotations
from collections.abc import Iterable
import logging
import random
from typing_extensions import TYPE_CHECKING
from .chains import ascending_reachable
from .config import ExperimentConfig
from .dependence import check_hyp_1_1, check_hyp_1_3
from .logs import traced
from .moves import enumerate_w1
from .orbits import ProductBound, degree_restricted_orbit, is_minimal, level_set, minimize, polynomial_degree, syllable_count_bound
from .reports import BoundReport, CensusRecord, GrowthReport, GrowthRow
from .sampling import sample_words
from .words import Alphabet, CyclicWord, parse_word

if TYPE_CHECKING:
    from .store import LevelSetStore


_log = logging.getLogger(__name__)


KHAN_MIN_LENGTH = 6
"""Shortest length at which :math:`8|u| - 40` is positive."""


def khan_bound(length: int, /) -> int:
    """
    :math:`8|u| - 40`, the expected sharp bound on :math:`N(u)` in rank 2.

    >>> khan_bound(6), khan_bound(14)
    (8, 72)
    """
    return 8 * length - 40


def satisfies_hyp_1_1(u: CyclicWord, /) -> bool:
    """
    Minimal, with strictly increasing occurrence counts.

    >>> satisfies_hyp_1_1(CyclicWord([1, 1, 2, 2, 2], 2)), satisfies_hyp_1_1(CyclicWord([1, 2, -1, -2], 2))
    (True, False)
    """
    return check_hyp_1_1(u).holds


@traced
def census(
    u: CyclicWord,
    /, *,
    auto_minimize: bool = False,
    max_degree: int | None = None,
    store: LevelSetStore | None = None,
    override: bool = False,
) -> CensusRecord:
    """
    Level-set size, orbit counts, bound checks and hypothesis flags of one word.

    Non-minimal words raise :py:class:`~rberga06.orbits.errors.NotMinimalError`
    unless ``auto_minimize`` is set. Failed checks are logged as warnings and recorded.
    """
    minimized_from = None
    if auto_minimize:
        v, chain = minimize(u, override=override)
        if chain.steps:
            _log.info(f"{u} minimizes to {v} in {len(chain)} steps")
            minimized_from, u = list(u.letters), v
    n = u.rank
    ls = level_set(u, store=store, override=override)
    N_k = tuple(degree_restricted_orbit(u, k, override=override).count for k in range(n))
    bound = ProductBound(ls.count, N_k, len(enumerate_w1(u.alphabet, override=override)))
    syllables = syllable_count_bound(n, len(u))
    record = CensusRecord(
        n=n, u=u.text, letters=list(u.letters), length=len(u),
        N=bound.N, N_k=list(N_k), C=bound.C, bound_ok=bound.ok,
        syllable_bound=syllables, syllable_bound_ok=N_k[0] <= syllables,
        minimized_from=minimized_from,
    )
    if not bound.ok:
        _log.warning(f"{u}: N = {bound.N} exceeds C * prod N_k = {bound.bound}")
    if n == 2:
        if len(u) >= KHAN_MIN_LENGTH:
            record.khan_bound = khan_bound(len(u))
            record.khan_bound_ok = bound.N <= record.khan_bound
            if not record.khan_bound_ok:
                _log.warning(f"{u}: N = {bound.N} exceeds 8|u| - 40 = {record.khan_bound}")
        else:
            _log.info(f"{u}: 8|u| - 40 is not positive at length {len(u)}, skipped")
    if u:
        hypotheses = check_hyp_1_1(u).merge(check_hyp_1_3(u, ls=ls))
        r = n - 1 if max_degree is None else max_degree
        reached = ascending_reachable(u, r)
        missing = [v.to_json() for v in ls.sorted_core() if v not in reached]
        if missing:
            hypotheses.witnesses["ascending_missing"] = missing
            _log.warning(f"{u}: {len(missing)} members lack an ascending chain of degree <= {r}")
        record.hypotheses = hypotheses
    return record


def findings(record: CensusRecord, /) -> list[str]:
    """Human-readable notes on every failed check of ``record``."""
    notes = []
    if not record.bound_ok:
        notes.append(f"{record.u}: product bound fails (N = {record.N}, N_k = {record.N_k}, C = {record.C})")
    if record.syllable_bound_ok is False:
        notes.append(f"{record.u}: N_0 = {record.N_k[0]} exceeds {record.syllable_bound}")
    if record.khan_bound_ok is False:
        notes.append(f"{record.u}: N = {record.N} exceeds 8|u| - 40 = {record.khan_bound}")
    for key in record.hypotheses.witnesses:
        notes.append(f"{record.u}: {key} fails")
    return notes


def config_words(config: ExperimentConfig, /) -> list[CyclicWord]:
    """The explicit words of ``config``, then its random ones."""
    words = [parse_word(text, config.rank) for text in config.words]
    if config.random is not None:
        alphabet = Alphabet.of_rank(config.rank)
        accept = (lambda _: True) if config.auto_minimize else is_minimal
        sampled = sample_words(
            alphabet, config.random.lengths, config.random.samples,
            random.Random(config.random.seed), accept=accept,
        )
        words.extend(w for length in config.random.lengths for w in sampled[length])
    return words


@traced
def census_many(config: ExperimentConfig, /, *, store: LevelSetStore | None = None) -> BoundReport:
    report = BoundReport()
    for u in config_words(config):
        record = census(
            u, auto_minimize=config.auto_minimize, max_degree=config.max_degree,
            store=store, override=config.override_rank_guard,
        )
        report.records.append(record)
        report.findings.extend(findings(record))
    return report


@traced
def growth(
    rank: int,
    lengths: Iterable[int],
    samples: int,
    seed: int,
    /, *,
    store: LevelSetStore | None = None,
) -> GrowthReport:
    """
    Largest sampled :math:`N(u)` per length, over words satisfying the occurrence hypothesis.

    No fit is attempted; the rows are raw data.
    """
    lengths = list(lengths)
    alphabet = Alphabet.of_rank(rank)
    sampled = sample_words(alphabet, lengths, samples, random.Random(seed), accept=satisfies_hyp_1_1)
    report = GrowthReport(rank=rank, seed=seed, samples=samples, polynomial_degree=polynomial_degree(rank))
    for length in lengths:
        best: tuple[int, CyclicWord] | None = None
        for u in sorted(sampled[length], key=lambda w: w.key):
            N = level_set(u, store=store).count
            if best is None or N > best[0]:
                best = (N, u)
        report.rows.append(GrowthRow(
            length=length, sampled=len(sampled[length]),
            max_N=None if best is None else best[0],
            argmax=None if best is None else best[1].to_json(),
        ))
        _log.info(f"length {length}: {report.rows[-1].max_N}")
    return report


__all__ = [
    "KHAN_MIN_LENGTH",
    "khan_bound",
    "satisfies_hyp_1_1",
    "census",
    "findings",
    "config_words",
    "census_many",
    "growth",
]
