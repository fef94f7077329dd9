#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Marker sequences V_u over rank n + 3k, and lifting moves of F_n onto them."""
from __future__ import annotations
from dataclasses import dataclass
from typing_extensions import Any, final, override
from .errors import DegreeMismatchError, MultiplierError, NoLowLetterError, PreconditionError, RankError, RestrictionError
from .moves import WhiteheadW2, apply_w2, complement
from .orbits import DegreeOrbit, degree_restricted_orbit
from .types import Letter, LetterSet, letter_label, pm, sorted_letters
from .words import Alphabet, CyclicWord, WordTuple


@final
@dataclass(frozen=True, slots=True)
class LowLetterFactorization:
    """
    :math:`u = y_1 u_1 \\cdots y_\\ell u_\\ell` with every :math:`y_i` of index at most ``k``
    and every :math:`u_i` over the higher generators.
    """
    pieces: tuple[tuple[Letter, tuple[Letter, ...]], ...]
    k: int

    @property
    def piece_count(self) -> int:
        """:math:`\\ell_k`"""
        return len(self.pieces)

    def concatenation(self) -> tuple[Letter, ...]:
        return tuple(x for y, segment in self.pieces for x in (y, *segment))

    @override
    def __str__(self) -> str:
        return " | ".join(" ".join(map(letter_label, (y, *segment))) for y, segment in self.pieces)


def factor_by_low_letters(u: CyclicWord, k: int, /) -> LowLetterFactorization:
    """
    Cut ``u`` before each letter of index at most ``k``, starting from the first such
    letter of the canonical rotation.

    >>> str(factor_by_low_letters(CyclicWord([1, 2, 1, -2], 2), 1))
    "x1 x2 | x1 x2'"
    """
    n = u.rank
    if not 1 <= k <= n - 1:
        raise PreconditionError(f"Cut index {k} is outside 1..{n - 1}.")
    letters = u.letters
    cuts = [i for i, x in enumerate(letters) if abs(x) <= k]
    if not cuts:
        raise NoLowLetterError(f"{u} has no letter of index at most {k}.")
    pieces = tuple(
        (letters[i], letters[i + 1:j])
        for i, j in zip(cuts, [*cuts[1:], len(letters)])
    )
    if cuts[0]:
        # wrap the letters before the first cut onto the last piece
        y, segment = pieces[-1]
        pieces = (*pieces[:-1], (y, (*segment, *letters[:cuts[0]])))
    return LowLetterFactorization(pieces, k)


@final
@dataclass(frozen=True, slots=True)
class MarkedSequence:
    """
    :math:`V_u = (v_1, \\dots, v_\\ell)` over the marker alphabet of ``(n, k)``.

    ``rules`` records, per piece, the marker pattern used to build it.
    """
    words: WordTuple
    n: int
    k: int
    source: CyclicWord | None = None
    rules: tuple[str, ...] = ()

    @property
    def alphabet(self) -> Alphabet:
        return self.words.alphabet

    @property
    def total_length(self) -> int:
        return self.words.total_length

    @property
    def cyclic_key(self) -> tuple[tuple[Letter, ...], ...]:
        return self.words.cyclic_key

    def same_up_to_rotation(self, other: MarkedSequence, /) -> bool:
        return self.alphabet == other.alphabet and self.cyclic_key == other.cyclic_key

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.k, "words": self.words.to_json()}

    @override
    def __str__(self) -> str:
        return str(self.words)


def _head(y: Letter, n: int, /) -> Letter:
    return y if y > 0 else n - y


def _tail(y: Letter, n: int, /) -> Letter:
    return 3 * n + y if y > 0 else 2 * n - y


def build_marked_sequence(u: CyclicWord, k: int, /) -> MarkedSequence:
    """
    :math:`v_i = h(y_i)\\, u_i\\, t(y_{i+1})\\, u_i^{-1}` with :math:`h(x_j) = x_j`,
    :math:`h(x_j^{-1}) = x_{n+j}`, :math:`t(x_j) = x_{3n+j}`, :math:`t(x_j^{-1}) = x_{2n+j}`
    (indices of ``y`` taken cyclically).

    >>> V = build_marked_sequence(CyclicWord([1, 2, 1, -2], 2), 1)
    >>> [v.text for v in V.words], V.total_length
    (['abgB', 'aBgb'], 8)
    """
    n = u.rank
    factorization = factor_by_low_letters(u, k)
    alphabet = Alphabet.markers(n, k)
    pieces = factorization.pieces
    words, rules = [], []
    for i, (y, segment) in enumerate(pieces):
        following = pieces[(i + 1) % len(pieces)][0]
        head, tail = _head(y, n), _tail(following, n)
        words.append(CyclicWord([head, *segment, tail, *(-x for x in reversed(segment))], alphabet))
        rules.append(f"{letter_label(y)}..{letter_label(following)}: {letter_label(head)} u{i + 1} {letter_label(tail)} u{i + 1}^-1")
    return MarkedSequence(WordTuple(words, alphabet), n, k, u, tuple(rules))


def _check_rank(sigma: WhiteheadW2, n: int, /) -> None:
    if sigma.alphabet != Alphabet.of_rank(n):
        raise RankError(f"{sigma!r} is not over the free group of rank {n}.")


def lift_degree_k(sigma: WhiteheadW2, V: MarkedSequence, /) -> WhiteheadW2:
    """
    The degree-0 move :math:`(T + P_1 + Q_1, x_r)` over the markers of ``V`` mirroring a
    degree-``k`` move :math:`(S, x_r)` of :math:`F_n` (complemented first if its multiplier is inverted).

    >>> V = build_marked_sequence(CyclicWord([1, 2, 1, -2], 2), 1)
    >>> lift_degree_k(WhiteheadW2([1], 2, 2), V)
    WhiteheadW2({a, A, e, E}, b)
    """
    n, k = V.n, V.k
    _check_rank(sigma, n)
    if sigma.degree != k:
        raise DegreeMismatchError(f"{sigma} has degree {sigma.degree}, expected {k}.")
    s = sigma if sigma.a > 0 else complement(sigma)
    r = s.a
    if r <= k:
        raise MultiplierError(f"Multiplier of {s} has index {r} <= {k}.")
    S = s.A
    T = {x for x in S if abs(x) > k}
    P1 = {z for x in S if 0 < x <= k for z in pm(x, 2 * n + x)}
    Q1 = {z for x in S if -k <= x < 0 for z in pm(n - x, 3 * n - x)}
    return WhiteheadW2(T | P1 | Q1, r, V.alphabet)


_PATTERNS = ("i", "ii", "iii", "iv")


def _marker_set(n: int, /) -> LetterSet:
    return pm(1, n + 1, 2 * n + 1, 3 * n + 1)


def _pattern(S: LetterSet, n: int, /) -> str | None:
    hit = S & _marker_set(n)
    if hit == _marker_set(n):
        return "i"
    if hit == pm(1, 2 * n + 1):
        return "ii"
    if hit == pm(n + 1, 3 * n + 1):
        return "iii"
    if not hit:
        return "iv"
    return None


@final
@dataclass(frozen=True, slots=True)
class RestrictedW2:
    """
    A W2 move :math:`(S, s)` over the markers of rank ``n`` (with ``k = 1``) whose multiplier
    avoids :math:`x_1^{\\pm 1}` and whose set meets :math:`I = \\{x_1, x_{n+1}, x_{2n+1}, x_{3n+1}\\}^{\\pm 1}`
    in one of four patterns: all of :math:`I`, :math:`\\{x_1, x_{2n+1}\\}^{\\pm 1}`,
    :math:`\\{x_{n+1}, x_{3n+1}\\}^{\\pm 1}`, or nothing.
    """
    S: LetterSet
    s: Letter
    n: int

    def __post_init__(self) -> None:
        if not 2 <= abs(self.s) <= self.n:
            raise RestrictionError(f"Multiplier {letter_label(self.s)} is not among x2..x{self.n} and their inverses.")
        if _pattern(self.S, self.n) is None:
            marked = sorted_letters(self.S & _marker_set(self.n))
            raise RestrictionError(f"The set meets the marker letters in {', '.join(map(letter_label, marked))}: no allowed pattern.")

    @property
    def pattern(self) -> str:
        return _pattern(self.S, self.n) or ""

    @property
    def move(self) -> WhiteheadW2:
        return WhiteheadW2(self.S, self.s, Alphabet.markers(self.n, 1))


def lift_general(tau: WhiteheadW2, V: MarkedSequence, /) -> RestrictedW2:
    """
    Lift a move of :math:`F_n` with multiplier other than :math:`x_1^{\\pm 1}` onto the markers of ``V`` (``k = 1``).

    >>> V = build_marked_sequence(CyclicWord([1, 2, 1, -2], 2), 1)
    >>> alpha = lift_general(WhiteheadW2([1], 2, 2), V)
    >>> sorted_letters(alpha.S), alpha.s, alpha.pattern
    ([1, -1, 5, -5], 2, 'ii')
    """
    n = V.n
    if V.k != 1:
        raise PreconditionError(f"General lifting needs k = 1, not {V.k}.")
    _check_rank(tau, n)
    if abs(tau.a) == 1:
        raise MultiplierError(f"Multiplier of {tau} is x1 or its inverse.")
    A, a = tau.A, tau.a
    m1, m2, m3 = n + 1, 2 * n + 1, 3 * n + 1
    if 1 in A and -1 in A:
        S = A | pm(m1, m2, m3)
    elif 1 in A:
        S = A | {-1} | pm(m2)
    elif -1 in A:
        S = (A - {-1}) | pm(m1, m3)
    else:
        S = A
    return RestrictedW2(frozenset(S), a, n)


def project_restricted(alpha: RestrictedW2, /) -> WhiteheadW2:
    """
    The move of :math:`F_n` a restricted move comes from: :math:`T = S \\setminus I` plus
    :math:`x_1^{\\pm 1}`, :math:`x_1`, :math:`x_1^{-1}` or nothing, by pattern.

    >>> project_restricted(RestrictedW2(frozenset({1, -1, 5, -5}), 2, 2))
    WhiteheadW2({a}, b)
    """
    n = alpha.n
    T = alpha.S - _marker_set(n)
    extra: dict[str, set[Letter]] = {"i": {1, -1}, "ii": {1}, "iii": {-1}, "iv": set()}
    return WhiteheadW2(T | extra[alpha.pattern], alpha.s, Alphabet.of_rank(n))


def apply_to_sequence(aut: WhiteheadW2, V: MarkedSequence, /) -> tuple[MarkedSequence, int]:
    """Apply ``aut`` to every entry of ``V``; also return the change in total length."""
    if aut.alphabet != V.alphabet:
        raise RankError(f"{aut!r} acts on {aut.alphabet!r}, but the sequence is over {V.alphabet!r}.")
    words = apply_w2(aut, V.words)
    return MarkedSequence(words, V.n, V.k), words.total_length - V.total_length


def sequence_orbit(V: MarkedSequence, k: int = 0, /) -> DegreeOrbit:
    """:math:`\\Omega_k(V)`, walking the word tuple with summed lengths."""
    return degree_restricted_orbit(V.words, k)


__all__ = [
    "LowLetterFactorization",
    "factor_by_low_letters",
    "MarkedSequence",
    "build_marked_sequence",
    "lift_degree_k",
    "RestrictedW2",
    "lift_general",
    "project_restricted",
    "apply_to_sequence",
    "sequence_orbit",
]
