#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Chains of Whitehead moves: derived moves, ascending reordering, ascending reachability."""
from __future__ import annotations
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
import logging
import random
from typing_extensions import Any, final, override
from .errors import ContradictionError, NotMinimalError, PreconditionError, RankError
from .logs import traced
from .moves import Move, WhiteheadW2, apply, apply_w2, complement, enumerate_w2, length_delta
from .sampling import all_cyclic_words, random_cyclic_word
from .types import Degree, Letter, LetterSet
from .words import Alphabet, CyclicWord, Orbital


_log = logging.getLogger(__name__)


@final
@dataclass(frozen=True, slots=True)
class MoveChain:
    """
    A finite sequence of moves, applied first to last.

    ``case`` names the reordering case that produced the chain, if any.

    >>> chain = MoveChain((WhiteheadW2([1], 2, 2), WhiteheadW2([], 2, 2)))
    >>> chain.degrees, chain.is_ascending
    ((1, 0), False)
    >>> chain(CyclicWord([1, 2], 2)).letters
    (1, 2, 2)
    """
    steps: tuple[Move, ...] = ()
    case: str | None = None

    @property
    def degrees(self) -> tuple[Degree, ...]:
        """Degrees of the W2 steps, in order."""
        return tuple(m.degree for m in self.steps if isinstance(m, WhiteheadW2))

    @property
    def is_ascending(self) -> bool:
        degrees = self.degrees
        return all(d <= e for d, e in zip(degrees, degrees[1:]))

    def trace(self, w: Orbital, /) -> Iterator[Orbital]:
        """``w`` followed by the image after each step."""
        yield w
        for move in self.steps:
            w = apply(move, w)
            yield w

    def preserves(self, w: Orbital, /) -> bool:
        """Whether every prefix of the chain keeps ``|w|``."""
        return all(len(v) == len(w) for v in self.trace(w))

    def then(self, other: MoveChain, /) -> MoveChain:
        return MoveChain(self.steps + other.steps)

    def to_json(self) -> dict[str, Any]:
        return {"steps": [m.to_json() for m in self.steps], "case": self.case}

    def __call__(self, w: Orbital, /) -> Any:
        for move in self.steps:
            w = apply(move, w)
        return w

    def __len__(self) -> int:
        return len(self.steps)

    @override
    def __str__(self) -> str:
        return "; ".join(map(str, self.steps)) if self.steps else "(identity)"


def _same_alphabet(u: CyclicWord, *moves: WhiteheadW2) -> None:
    for m in moves:
        if m.alphabet != u.alphabet:
            raise RankError(f"{m!r} acts on {m.alphabet!r}, but {u!r} is over {u.alphabet!r}.")


def _require_minimal(u: CyclicWord, /) -> None:
    hit = enumerate_w2(u.alphabet).first_reducing(u)
    if hit is not None:
        raise NotMinimalError(u, *hit)


def _require_preserving(u: CyclicWord, *moves: WhiteheadW2) -> None:
    for m in moves:
        if (delta := length_delta(m, u)) != 0:
            raise PreconditionError(f"{m} changes the length of {u} by {delta}.")


def lemma21_consequences(sigma: WhiteheadW2, tau: WhiteheadW2, u: CyclicWord, /) -> tuple[WhiteheadW2, ...]:
    """
    Further length-preserving moves forced by two length-preserving moves
    :math:`\\sigma = (A, a^{-1})` and :math:`\\tau = (B, b)` on a minimal ``u``.

    - if :math:`a^{-1} = b`: :math:`(A \\cap B, a^{-1})`;
    - if :math:`a^{\\pm 1} \\notin B` and :math:`b \\notin A`: :math:`(A - B, a^{-1})` and :math:`(B - A, b)`.

    Any other configuration raises :py:class:`PreconditionError`; a derived move that
    does change ``|u|`` raises :py:class:`ContradictionError`.

    >>> u = CyclicWord([1, 1, 2, 2, 2], 2)
    >>> [str(m) for m in lemma21_consequences(WhiteheadW2([1, -1], 2, 2), WhiteheadW2([1], -2, 2), u)]
    ['({A}, b)', '({}, B)']
    """
    _same_alphabet(u, sigma, tau)
    _require_minimal(u)
    _require_preserving(u, sigma, tau)
    A, s, B, b = sigma.A, sigma.a, tau.A, tau.a
    E = A & B
    if s == b:
        derived: tuple[WhiteheadW2, ...] = (WhiteheadW2._trusted(E, s, u.alphabet),)
    elif s not in B and -s not in B and b not in A:
        derived = (WhiteheadW2._trusted(A - E, s, u.alphabet), WhiteheadW2._trusted(B - E, b, u.alphabet))
    else:
        raise PreconditionError(f"No derived moves for {sigma} and {tau}: neither configuration applies.")
    for m in derived:
        if (delta := length_delta(m, u)) != 0:
            raise ContradictionError(f"Derived move {m} changes the length of minimal word {u} by {delta}.")
    return derived


def _strict_occurrence_order(u: CyclicWord, /) -> bool:
    counts = u.counts()
    present = sorted(counts)
    return all(counts[i] < counts[j] for i, j in zip(present, present[1:]))


def _pattern_ok(chain: MoveChain, top: Degree, /) -> bool:
    degrees = chain.degrees
    if all(d == top for d in degrees):
        return True
    return degrees[-1] == top and all(d < top for d in degrees[:-1])


def reorder_pair(sigma1: WhiteheadW2, sigma2: WhiteheadW2, u: CyclicWord, /) -> MoveChain:
    """
    Rewrite :math:`\\sigma_2 \\sigma_1` (``sigma1`` applied first) with
    :math:`\\deg \\sigma_1 > \\deg \\sigma_2` as an ascending chain of at most three
    length-preserving moves, each of degree at most :math:`\\deg \\sigma_1`.

    ``u`` must be minimal with strictly increasing occurrence counts, and both
    :math:`\\sigma_1(u)` and :math:`\\sigma_2 \\sigma_1(u)` must keep ``|u|``.
    The result is checked against ``u``; a failed check raises :py:class:`ContradictionError`.

    >>> u = CyclicWord([1, 1, 2, 2, 2], 2)
    >>> s1, s2 = WhiteheadW2([-1], 2, 2), WhiteheadW2([], 1, 2)
    >>> chain = reorder_pair(s1, s2, u)
    >>> chain.case, chain.degrees, chain(u) == apply_w2(s1, u)
    ('3', (0, 0, 1), True)
    """
    _same_alphabet(u, sigma1, sigma2)
    alphabet = u.alphabet
    _require_minimal(u)
    if not _strict_occurrence_order(u):
        raise PreconditionError(f"Occurrence counts of {u} are not strictly increasing.")
    _require_preserving(u, sigma1)
    v = apply_w2(sigma1, u)
    target = apply_w2(sigma2, v)
    if len(target) != len(u):
        raise PreconditionError(f"{sigma2} does not keep the length of {v}.")
    top = sigma1.degree
    if top <= sigma2.degree:
        raise PreconditionError(f"deg {sigma1} = {top} is not larger than deg {sigma2} = {sigma2.degree}.")

    # normalize: c = x_top one-sided in A, c^{±1} outside B
    c = top
    s1 = sigma1 if c in sigma1.A else complement(sigma1)
    s2 = sigma2 if c not in sigma2.A and -c not in sigma2.A else complement(sigma2)
    A, a, B, b = s1.A, s1.a, s2.A, s2.a
    if abs(a) <= top:
        raise PreconditionError(f"The multiplier of {s1} has index at most {top}.")
    if (a in B) != (-a in B):
        raise PreconditionError(f"{s2} contains exactly one of {a}, {-a}.")

    chain = MoveChain(_reordering_steps(A, a, B, b, c, alphabet), _reordering_case(A, a, B, b, c))
    if not chain.preserves(u):
        raise ContradictionError(f"Reordering ({chain.case}) of {sigma1}, {sigma2} leaves the level of {u}.")
    if chain(u) != target:
        raise ContradictionError(f"Reordering ({chain.case}) of {sigma1}, {sigma2} does not act like the original pair on {u}.")
    if not _pattern_ok(chain, top):
        raise ContradictionError(f"Reordering ({chain.case}) of {sigma1}, {sigma2} has degrees {chain.degrees}.")
    return chain


def _reordering_case(A: LetterSet, a: Letter, B: LetterSet, b: Letter, c: Letter, /) -> str:
    E = A & B
    b_in, bi_in = b in A, -b in A
    if a not in B:
        if not b_in and not bi_in:
            if not E:
                return "1.1.1" if a == b else "1.1.2"
            return "1.2.1" if a == b else "1.2.2" if a == -b else "1.2.3"
        if bi_in and not b_in:
            return "2.1" if not E else "2.2"
        return "3" if b_in and not bi_in else "4"
    if not b_in and not bi_in:
        return "5"
    if bi_in and not b_in:
        return "6.1" if c == -b else "6.2"
    if b_in and not bi_in:
        return "7.1" if c == b else "7.2"
    return "8"


def _reordering_steps(A: LetterSet, a: Letter, B: LetterSet, b: Letter, c: Letter, alphabet: Alphabet, /) -> tuple[WhiteheadW2, ...]:
    E = A & B
    C, D = A - E, B - E
    apm, bpm = frozenset((a, -a)), frozenset((b, -b))

    def w(S: Iterable[Letter], m: Letter) -> WhiteheadW2:
        return WhiteheadW2(S, m, alphabet)

    match _reordering_case(A, a, B, b, c):
        case "1.1.1":
            return (w(A | B, a),)
        case "1.1.2":
            return (w(B, b), w(A, a))
        case "1.2.1":
            return (w(E, a), w(C | B, a))
        case "1.2.2":
            return (w(D, -a), w(C, a))
        case "1.2.3":
            return (w(E, a), w(B, b), w(C, a))
        case "2.1":
            return (w(B, b), w(A | B, a))
        case "2.2":
            return (w(E, a), w(B, b), w(C | B, a))
        case "3":
            return (w(D, -a), w(B, b), w(C, a))
        case "4":
            return (w(D, -a), w(B, b), w(C | B, a))
        case "5":
            return (w(C | B, b), w(A, a), w(C, -b))
        case "6.1":
            return (w((C | B | {b}) - apm, a), w(B, b), w(E | {-b}, a))
        case "7.1":
            return (w(C - {b}, a), w(B, b), w((D | {-b}) - apm, -a))
        case "8":
            return (w(C - bpm, -b), w(A, a), w((C | B) - bpm, b))
        case other:
            raise ContradictionError(f"Configuration {other} cannot occur for a minimal word satisfying the occurrence ordering.")


def _ascending_walk(u: CyclicWord, r: Degree, /, stop: CyclicWord | None = None) -> dict[CyclicWord, MoveChain]:
    moves = [m for m in enumerate_w2(u.alphabet) if m.degree <= r]
    screen = enumerate_w2(u.alphabet)
    allowed = frozenset(moves)
    edges: dict[CyclicWord, list[tuple[WhiteheadW2, CyclicWord]]] = {}

    def out(w: CyclicWord) -> list[tuple[WhiteheadW2, CyclicWord]]:
        if w not in edges:
            edges[w] = [(m, apply_w2(m, w)) for m in screen.preserving(w) if m in allowed]
        return edges[w]

    State = tuple[CyclicWord, Degree]
    start: State = (u, 0)
    parent: dict[State, tuple[State, WhiteheadW2] | None] = {start: None}
    first: dict[CyclicWord, State] = {u: start}
    queue: deque[State] = deque([start])
    expanded = 0
    while queue:
        state = queue.popleft()
        expanded += 1
        w, floor = state
        if stop is not None and w == stop:
            break
        for move, v in out(w):
            if move.degree < floor:
                continue
            nxt = (v, move.degree)
            if nxt not in parent:
                parent[nxt] = (state, move)
                first.setdefault(v, nxt)
                queue.append(nxt)
        if expanded % 10_000 == 0:
            _log.info(f"{len(parent)} ascending states from {u}, {len(first)} words")

    def chain(state: State) -> MoveChain:
        steps: list[WhiteheadW2] = []
        while (link := parent[state]) is not None:
            state, move = link
            steps.append(move)
        return MoveChain(tuple(reversed(steps)))

    return {w: chain(state) for w, state in first.items()}


@traced
def ascending_reachable(u: CyclicWord, r: Degree, /) -> dict[CyclicWord, MoveChain]:
    """
    Every word reachable from the minimal word ``u`` through an ascending chain of
    length-preserving moves of degree at most ``r``, each with a shortest such chain.
    """
    _require_minimal(u)
    return _ascending_walk(u, r)


@traced
def ascending_chain_search(u: CyclicWord, v: CyclicWord, r: Degree, /) -> MoveChain | None:
    """
    An ascending chain of length-preserving moves of degree at most ``r`` from ``u`` to ``v``.

    >>> u = CyclicWord([1, 1, 2, 2, 2], 2)
    >>> ascending_chain_search(u, CyclicWord([1, 2, 2, 2, 1], 2), 1)
    MoveChain(steps=(), case=None)
    >>> ascending_chain_search(u, CyclicWord([1, 1, 2, 2], 2), 1) is None
    True
    """
    _require_minimal(u)
    if v.alphabet != u.alphabet:
        raise RankError(f"{v!r} is not over {u.alphabet!r}.")
    if len(v) != len(u):
        return None
    return _ascending_walk(u, r, stop=v).get(v)


def action_mismatch(
    first: MoveChain,
    second: MoveChain,
    alphabet: Alphabet,
    /, *,
    max_length: int = 8,
    samples: int = 100,
    sample_length: int = 16,
    seed: int = 0,
) -> CyclicWord | None:
    """
    A cyclic word on which the two chains disagree, if any: every word up to
    ``max_length``, then ``samples`` random words of length ``sample_length``.
    """
    def differs(w: CyclicWord) -> bool:
        return first(w) != second(w)

    for w in all_cyclic_words(alphabet, max_length):
        if differs(w):
            return w
    rng = random.Random(seed)
    for _ in range(samples):
        if differs(w := random_cyclic_word(alphabet, sample_length, rng)):
            return w
    return None


def chains_equivalent(first: MoveChain, second: MoveChain, alphabet: Alphabet, /, **kwargs: Any) -> bool:
    """
    Whether two chains act identically on cyclic words (tested, not proved).

    >>> s = WhiteheadW2([2], 1, 2)
    >>> chains_equivalent(MoveChain((s,)), MoveChain((complement(s),)), s.alphabet, max_length=5, samples=10)
    True
    """
    return action_mismatch(first, second, alphabet, **kwargs) is None


__all__ = [
    "MoveChain",
    "lemma21_consequences",
    "reorder_pair",
    "ascending_reachable",
    "ascending_chain_search",
    "action_mismatch",
    "chains_equivalent",
]
