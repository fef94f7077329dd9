#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Verification suites: exhaustive and sampled checks of the move calculus."""
from __future__ import annotations
from collections.abc import Callable, Iterable
from enum import StrEnum
import itertools
import logging
import random
from typing_extensions import Any, override
from .chains import MoveChain, action_mismatch, ascending_reachable, lemma21_consequences, reorder_pair
from .dependence import check_hyp_1_1, check_hyp_1_3
from .errors import ContradictionError, PreconditionError, WhiteheadError
from .experiments import census, findings
from .markers import apply_to_sequence, build_marked_sequence, lift_degree_k, lift_general, project_restricted, sequence_orbit
from .moves import WhiteheadW2, apply_w2, complement, enumerate_w2, length_delta
from .orbits import degree_restricted_orbit, is_minimal, lemma22_violations, level_set
from .reports import Failure, SuiteReport, VerifyReport
from .sampling import all_cyclic_words, random_cyclic_word, sample_words
from .words import Alphabet, CyclicWord, parse_word


_log = logging.getLogger(__name__)


EXAMPLE_WORDS = {
    "example-1": ("aabbbccccddddd", 4),
    "example-2": ("aabbbccdCdcddd", 4),
}
"""The two standard rank-4 example words."""


class Suite(StrEnum):
    FORMULA = "formula"
    COMPLEMENT = "complement"
    LEMMA21 = "lemma21"
    LEMMA22 = "lemma22"
    LEMMA31 = "lemma31"
    THEOREM14 = "theorem14"
    LIFT = "lift"
    BOUND = "bound"

    @override
    def __str__(self) -> str:
        return self.value


def example_words() -> list[CyclicWord]:
    return [parse_word(text, rank) for text, rank in EXAMPLE_WORDS.values()]


def _full_support(u: CyclicWord, /) -> bool:
    return set(u.counts()) == set(u.alphabet.generators)


def _hyp_words(ranks: Iterable[int], count: int, seed: int, lengths: range, /) -> list[CyclicWord]:
    """Sampled minimal words with strictly increasing occurrence counts, using every generator."""
    rng = random.Random(seed)
    ranks = list(ranks)
    words: list[CyclicWord] = []
    for rank in ranks:
        sampled = sample_words(
            Alphabet.of_rank(rank), lengths, -(-count // (len(ranks) * len(lengths))), rng,
            accept=lambda w: _full_support(w) and check_hyp_1_1(w).holds, strict=False,
        )
        words.extend(w for length in lengths for w in sampled[length])
    return words


class _Collector:
    """Accumulates checks and failures for one suite."""
    __slots__ = ("report", "reproduce")

    def __init__(self, suite: Suite, reproduce: str, /) -> None:
        self.report = SuiteReport(suite=str(suite))
        self.reproduce = reproduce

    def check(self, ok: bool, detail: Callable[[], str], /) -> bool:
        self.report.checked += 1
        if not ok:
            message = detail()
            _log.error(f"{self.report.suite}: {message}")
            self.report.failures.append(Failure(check=self.report.suite, detail=message, reproduce=self.reproduce))
        return ok

    def finding(self, message: str, /) -> None:
        _log.warning(f"{self.report.suite}: {message}")
        self.report.findings.append(message)


def _sweep(ranks: Iterable[int], samples: int, max_length: int, seed: int, /) -> list[CyclicWord]:
    rng = random.Random(seed)
    words = []
    for rank in ranks:
        alphabet = Alphabet.of_rank(rank)
        words.extend(random_cyclic_word(alphabet, rng.randint(1, max_length), rng) for _ in range(samples))
    return words


def check_formula(*, ranks: Iterable[int] = (2, 3), samples: int = 500, max_length: int = 14, seed: int = 0) -> SuiteReport:
    """The pair-count length formula agrees with direct application."""
    out = _Collector(Suite.FORMULA, f"wh verify formula --seed {seed}")
    for w in _sweep(ranks, samples, max_length, seed):
        moves = enumerate_w2(w.alphabet)
        deltas = moves.deltas(w)
        for move, delta in zip(moves, deltas):
            actual = len(apply_w2(move, w)) - len(w)
            out.check(int(delta) == actual == length_delta(move, w), lambda: f"{move} on {w}: formula {int(delta)}, actual {actual}")
    return out.report


def check_complement(*, ranks: Iterable[int] = (2, 3), samples: int = 500, max_length: int = 14, seed: int = 0) -> SuiteReport:
    """A move and its complement act identically."""
    out = _Collector(Suite.COMPLEMENT, f"wh verify complement --seed {seed}")
    for w in _sweep(ranks, samples, max_length, seed):
        for move in enumerate_w2(w.alphabet):
            out.check(apply_w2(move, w) == apply_w2(complement(move), w), lambda: f"{move} and its complement differ on {w}")
    return out.report


def check_lemma22(*, ranks: Iterable[int] = (2, 3), words: int = 200, seed: int = 0) -> SuiteReport:
    """Length-preserving moves have a heavier multiplier than any one-sided letter, and degree below the rank."""
    out = _Collector(Suite.LEMMA22, f"wh verify lemma22 --seed {seed}")
    sample = _hyp_words(ranks, words, seed, range(6, 15))
    if len(sample) < words:
        out.finding(f"only {len(sample)} of {words} words sampled")
    for u in sample:
        violations = lemma22_violations(u)
        out.check(not violations, lambda: "; ".join(
            f"{v.move} on {u}: multiplier count {v.multiplier_count}, letter {v.letter} count {v.letter_count}"
            for v in violations
        ))
    return out.report


def check_lemma21(*, ranks: Iterable[int] = (2, 3), words: int = 50, seed: int = 0) -> SuiteReport:
    """Derived moves of qualifying pairs keep the length."""
    out = _Collector(Suite.LEMMA21, f"wh verify lemma21 --seed {seed}")
    rng = random.Random(seed)
    ranks = list(ranks)
    sample: list[CyclicWord] = []
    for rank in ranks:
        sampled = sample_words(Alphabet.of_rank(rank), range(4, 13), -(-words // (9 * len(ranks))), rng, accept=is_minimal, strict=False)
        sample.extend(w for ws in sampled.values() for w in ws)
    for u in sample:
        preserving = enumerate_w2(u.alphabet).preserving(u)
        for sigma, tau in itertools.product(preserving, repeat=2):
            try:
                derived = lemma21_consequences(sigma, tau, u)
            except PreconditionError:
                continue
            except ContradictionError as err:
                out.check(False, lambda: str(err))
                continue
            out.check(all(len(apply_w2(m, u)) == len(u) for m in derived), lambda: f"derived moves of {sigma}, {tau} change {u}")
    return out.report


def check_lemma31(*, max_word_length: int = 7, max_length: int = 8, samples: int = 100, seed: int = 0) -> SuiteReport:
    """
    Every qualifying pair on every short rank-2 word satisfying the occurrence hypothesis
    reorders into an ascending chain with the same action.
    """
    out = _Collector(Suite.LEMMA31, f"wh verify lemma31 --seed {seed}")
    alphabet = Alphabet.of_rank(2)
    moves = enumerate_w2(alphabet)
    verdicts: dict[tuple[WhiteheadW2, WhiteheadW2, str | None], CyclicWord | None] = {}
    refused = 0
    for u in all_cyclic_words(alphabet, max_word_length, min_length=1):
        if not check_hyp_1_1(u).holds:
            continue
        for sigma1 in moves.preserving(u):
            if sigma1.degree == 0:
                continue
            v = apply_w2(sigma1, u)
            for sigma2 in moves.preserving(v):
                if sigma2.degree >= sigma1.degree:
                    continue
                try:
                    chain = reorder_pair(sigma1, sigma2, u)
                except PreconditionError:
                    refused += 1
                    continue
                except ContradictionError as err:
                    out.check(False, lambda: f"{sigma1}, {sigma2} on {u}: {err}")
                    continue
                key = (sigma1, sigma2, chain.case)
                if key not in verdicts:
                    verdicts[key] = action_mismatch(chain, MoveChain((sigma1, sigma2)), alphabet, max_length=max_length, samples=samples, seed=seed)
                mismatch = verdicts[key]
                out.check(mismatch is None, lambda: f"case {chain.case} chain {chain} differs from {sigma1}; {sigma2} on {mismatch}")
    if refused:
        out.finding(f"{refused} pairs refused by the reordering preconditions")
    return out.report


def check_theorem14(*, ranks: Iterable[int] = (2, 3), words: int = 20, seed: int = 0, examples: bool = True) -> SuiteReport:
    """Every W2-reachable member of the level set is reachable through an ascending chain."""
    out = _Collector(Suite.THEOREM14, f"wh verify theorem14 --seed {seed}")
    sample = example_words() if examples else []
    sample.extend(_hyp_words(ranks, words, seed, range(6, 13)))
    for u in sample:
        ls = level_set(u)
        if not check_hyp_1_3(u, ls=ls).holds:
            out.finding(f"{u} fails the syllable hypothesis; skipped")
            continue
        reached = ascending_reachable(u, u.rank - 1)
        for v in ls.sorted_core():
            out.check(v in reached, lambda: f"no ascending chain from {u} to {v}")
    return out.report


def check_lift(*, max_word_length: int = 8, words: int = 21) -> SuiteReport:
    """
    Lifting commutes with building marker sequences, projection undoes the general lift,
    and :math:`N_1(u) \\le N_0(V_u)` with :math:`V_{u'}` telling apart the members of :math:`\\Omega_1(u)`.
    """
    out = _Collector(Suite.LIFT, "wh verify lift")
    alphabet = Alphabet.of_rank(2)
    sample = [CyclicWord([1, 2, 1, -2], alphabet)]
    for u in all_cyclic_words(alphabet, max_word_length, min_length=2):
        if len(sample) >= words:
            break
        if u not in sample and 1 in u.counts() and is_minimal(u):
            sample.append(u)
    for u in sample:
        V = build_marked_sequence(u, 1)
        out.check(V.total_length == 2 * len(u), lambda: f"V_{u} has total length {V.total_length}")
        moves = enumerate_w2(alphabet)
        for sigma in moves.preserving(u):
            image = build_marked_sequence(apply_w2(sigma, u), 1)
            if sigma.degree == 1:
                lifted, delta = apply_to_sequence(lift_degree_k(sigma, V), V)
                out.check(delta == 0 and lifted.same_up_to_rotation(image), lambda: f"lift of {sigma} on {u}: {lifted} vs {image}")
            if abs(sigma.a) != 1:
                alpha = lift_general(sigma, V)
                general, delta = apply_to_sequence(alpha.move, V)
                out.check(delta == 0 and general.same_up_to_rotation(image), lambda: f"general lift of {sigma} on {u}: {general} vs {image}")
                out.check(project_restricted(alpha) == sigma, lambda: f"projection of the lift of {sigma} is {project_restricted(alpha)}")
        orbit = degree_restricted_orbit(u, 1)
        keys = {build_marked_sequence(w, 1).cyclic_key for w in orbit.members}  # type: ignore[arg-type]
        out.check(len(keys) == orbit.count, lambda: f"marker sequences of Omega_1({u}) collide")
        N0 = sequence_orbit(V).count
        out.check(orbit.count <= N0, lambda: f"N_1({u}) = {orbit.count} > N_0(V_u) = {N0}")
    return out.report


def check_bound(*, lengths: Iterable[int] = range(6, 11), words: int = 5, seed: int = 0, examples: bool = True) -> SuiteReport:
    """The product bound on every censused word; the rank-2 sharp bound as a finding only."""
    out = _Collector(Suite.BOUND, f"wh verify bound --seed {seed}")
    sample = example_words() if examples else []
    sampled = sample_words(Alphabet.of_rank(2), lengths, words, random.Random(seed), accept=lambda w: check_hyp_1_1(w).holds, strict=False)
    sample.extend(w for ws in sampled.values() for w in ws)
    for u in sample:
        record = census(u)
        out.check(record.bound_ok, lambda: f"{u}: N = {record.N} > C * prod {record.N_k}")
        if record.khan_bound_ok is False:
            out.finding(f"{u}: N = {record.N} exceeds 8|u| - 40 = {record.khan_bound}")
        for note in findings(record):
            if "product bound" not in note and "8|u|" not in note:
                out.finding(note)
    return out.report


SUITES: dict[Suite, Callable[..., SuiteReport]] = {
    Suite.FORMULA: check_formula,
    Suite.COMPLEMENT: check_complement,
    Suite.LEMMA21: check_lemma21,
    Suite.LEMMA22: check_lemma22,
    Suite.LEMMA31: check_lemma31,
    Suite.THEOREM14: check_theorem14,
    Suite.LIFT: check_lift,
    Suite.BOUND: check_bound,
}
_SEEDED = {Suite.FORMULA, Suite.COMPLEMENT, Suite.LEMMA21, Suite.LEMMA22, Suite.LEMMA31, Suite.THEOREM14, Suite.BOUND}


def run(suites: Iterable[Suite | str], /, *, seed: int = 0, **kwargs: Any) -> VerifyReport:
    """Run the named suites in order (``"all"`` expands to every suite)."""
    names: list[Suite] = []
    for name in suites:
        if name == "all":
            names.extend(Suite)
        else:
            names.append(Suite(name))
    report = VerifyReport()
    for suite in names:
        _log.info(f"running {suite}")
        try:
            result = SUITES[suite](**({"seed": seed} if suite in _SEEDED else {}), **kwargs.get(str(suite), {}))
        except WhiteheadError as err:
            result = SuiteReport(suite=str(suite), failures=[Failure(check=str(suite), detail=str(err), reproduce=f"wh verify {suite} --seed {seed}")])
        report.suites.append(result)
    return report


__all__ = [
    "EXAMPLE_WORDS",
    "Suite",
    "example_words",
    "check_formula",
    "check_complement",
    "check_lemma21",
    "check_lemma22",
    "check_lemma31",
    "check_theorem14",
    "check_lift",
    "check_bound",
    "SUITES",
    "run",
]
