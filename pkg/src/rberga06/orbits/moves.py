#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Whitehead automorphisms of both types and their action on cyclic words."""
from __future__ import annotations
from collections.abc import Iterable, Iterator, Sequence
import itertools
from typing_extensions import Any, Self, final, overload, override
import numpy as np
from .cache import func
from .errors import MultiplierError, RankError, RankGuardError
from .types import Degree, Letter, LetterSet, letter_char, letter_label, one_sided, sorted_letters
from .words import Alphabet, CyclicWord, Orbital, WordTuple, pair_table


RANK_GUARD = 6
"""Largest rank enumerated without an explicit override."""


def _alphabet(alphabet: Alphabet | int, /) -> Alphabet:
    return Alphabet.of_rank(alphabet) if isinstance(alphabet, int) else alphabet


def _spell(x: Letter, /) -> str:
    return letter_char(x) if abs(x) <= 26 else letter_label(x)


@final
class WhiteheadW2:
    """
    A Whitehead automorphism of the second type :math:`(A, a)`.

    Each letter :math:`x` maps to :math:`x a` if only :math:`x \\in A`, to
    :math:`a^{-1} x` if only :math:`x^{-1} \\in A`, to :math:`a^{-1} x a` if both,
    and to itself otherwise.

    >>> s = WhiteheadW2([2, -2], 1, 2)
    >>> s.image(2), s.degree
    ((-1, 2, 1), 0)
    >>> str(s), s.to_json()
    ('({b, B}, a)', {'A': [2, -2], 'a': 1})
    """
    __slots__ = ("A", "a", "alphabet", "_hash")

    A: LetterSet
    a: Letter
    alphabet: Alphabet
    _hash: int

    def __init__(self, A: Iterable[Letter], a: Letter, alphabet: Alphabet | int, /) -> None:
        alphabet = _alphabet(alphabet)
        A = frozenset(A)
        alphabet.check([*A, a])
        if a in A or -a in A:
            raise MultiplierError(f"Multiplier {_spell(a)} (or its inverse) lies in the set {{{', '.join(map(_spell, sorted_letters(A)))}}}.")
        self.A, self.a, self.alphabet = A, a, alphabet
        self._hash = hash((A, a))

    @classmethod
    def _trusted(cls, A: LetterSet, a: Letter, alphabet: Alphabet, /) -> Self:
        self = object.__new__(cls)
        self.A, self.a, self.alphabet = A, a, alphabet
        self._hash = hash((A, a))
        return self

    def image(self, x: Letter, /) -> tuple[Letter, ...]:
        """The image of the letter ``x``, as a (reduced) word."""
        A, a = self.A, self.a
        return (*((-a,) if -x in A else ()), x, *((a,) if x in A else ()))

    @property
    def support(self) -> LetterSet:
        """:math:`A + a`"""
        return self.A | {self.a}

    @property
    def degree(self) -> Degree:
        return max((abs(x) for x in one_sided(self.A)), default=0)

    def to_json(self) -> dict[str, Any]:
        return {"A": sorted_letters(self.A), "a": self.a}

    @override
    def __eq__(self, other: object, /) -> bool:
        return (
            isinstance(other, WhiteheadW2)
            and self.a == other.a and self.A == other.A
            and self.alphabet == other.alphabet
        )

    @override
    def __hash__(self) -> int:
        return self._hash

    @override
    def __str__(self) -> str:
        return f"({{{', '.join(map(_spell, sorted_letters(self.A)))}}}, {_spell(self.a)})"

    @override
    def __repr__(self) -> str:
        return f"WhiteheadW2{self}"


@final
class WhiteheadW1:
    """
    A Whitehead automorphism of the first type: a signed permutation of the generators.

    ``images[i]`` is the image of the ``i``-th generator of the alphabet.

    >>> p = WhiteheadW1([-2, 1], 2)
    >>> p(1), p(-1), p(2)
    (-2, 2, 1)
    """
    __slots__ = ("images", "alphabet", "_map")

    images: tuple[Letter, ...]
    alphabet: Alphabet
    _map: dict[Letter, Letter]

    def __init__(self, images: Iterable[Letter], alphabet: Alphabet | int, /) -> None:
        alphabet = _alphabet(alphabet)
        images = tuple(images)
        if sorted(abs(x) for x in images) != list(alphabet.generators):
            raise RankError(f"{list(images)!r} is not a signed permutation of {alphabet!r}.")
        self.images, self.alphabet = images, alphabet
        self._map = {}
        for g, x in zip(alphabet.generators, images):
            self._map[g], self._map[-g] = x, -x

    def __call__(self, x: Letter, /) -> Letter:
        return self._map[x]

    @property
    def is_identity(self) -> bool:
        return self.images == self.alphabet.generators

    def to_json(self) -> dict[str, Any]:
        return {"images": list(self.images)}

    @override
    def __eq__(self, other: object, /) -> bool:
        return isinstance(other, WhiteheadW1) and (self.images, self.alphabet) == (other.images, other.alphabet)

    @override
    def __hash__(self) -> int:
        return hash(self.images)

    @override
    def __str__(self) -> str:
        return "[" + ", ".join(f"{_spell(g)}->{_spell(x)}" for g, x in zip(self.alphabet.generators, self.images)) + "]"

    @override
    def __repr__(self) -> str:
        return f"WhiteheadW1{self}"


Move = WhiteheadW2 | WhiteheadW1


def make_w2(A: Iterable[Letter], a: Letter, alphabet: Alphabet | int, /) -> WhiteheadW2:
    """
    Validated :math:`(A, a)`.

    >>> make_w2([1], 1, 2)
    Traceback (most recent call last):
    ...
    rberga06.orbits.errors.MultiplierError: Multiplier a (or its inverse) lies in the set {a}.
    """
    return WhiteheadW2(A, a, alphabet)


def _check_alphabet(move: Move, w: Orbital, /) -> None:
    if move.alphabet != w.alphabet:
        raise RankError(f"{move!r} acts on {move.alphabet!r}, but {w!r} is over {w.alphabet!r}.")


@overload
def apply_w2(sigma: WhiteheadW2, w: CyclicWord, /) -> CyclicWord: ...
@overload
def apply_w2(sigma: WhiteheadW2, w: WordTuple, /) -> WordTuple: ...
def apply_w2(sigma: WhiteheadW2, w: Orbital, /) -> Orbital:
    """
    Apply :math:`\\sigma` letterwise, then reduce and canonicalize.

    >>> apply_w2(WhiteheadW2([1], 2, 2), CyclicWord([1, 2], 2)).letters
    (1, 2, 2)
    """
    _check_alphabet(sigma, w)
    if isinstance(w, WordTuple):
        return WordTuple((apply_w2(sigma, v) for v in w.words), w.alphabet)
    image = sigma.image
    return CyclicWord._reduce([y for x in w.letters for y in image(x)], w.alphabet)


@overload
def apply_w1(pi: WhiteheadW1, w: CyclicWord, /) -> CyclicWord: ...
@overload
def apply_w1(pi: WhiteheadW1, w: WordTuple, /) -> WordTuple: ...
def apply_w1(pi: WhiteheadW1, w: Orbital, /) -> Orbital:
    """Relabel letterwise, then canonicalize."""
    _check_alphabet(pi, w)
    if isinstance(w, WordTuple):
        return WordTuple((apply_w1(pi, v) for v in w.words), w.alphabet)
    return CyclicWord._reduce(map(pi, w.letters), w.alphabet)


def apply(move: Move, w: Orbital, /) -> Orbital:
    """Apply a move of either type."""
    if isinstance(move, WhiteheadW1):
        return apply_w1(move, w)
    return apply_w2(move, w)


def length_delta(sigma: WhiteheadW2, w: Orbital, /) -> int:
    """
    :math:`|\\sigma(w)| - |w|`, computed from pair counts alone as
    :math:`(A+a).(A+a)' - a.\\Sigma`.

    >>> length_delta(WhiteheadW2([2], 1, 2), CyclicWord([2, -1], 2))
    -1
    """
    _check_alphabet(sigma, w)
    table = pair_table(w)
    support = sigma.support
    rest = [x for x in w.alphabet.letters if x not in support]
    return table.sets(support, rest) - table.total(sigma.a)


def degree(sigma: WhiteheadW2, /) -> Degree:
    """
    Largest generator index occurring one-sidedly in :math:`A` (0 if none).

    >>> degree(WhiteheadW2([2, 3, -3], -1, 3))
    2
    """
    return sigma.degree


def complement(sigma: WhiteheadW2, /) -> WhiteheadW2:
    """
    :math:`(\\bar A, a^{-1})`, acting like :math:`\\sigma` on every cyclic word.

    >>> complement(WhiteheadW2([2], 1, 2))
    WhiteheadW2({B}, A)
    """
    a = sigma.a
    rest = frozenset(x for x in sigma.alphabet.letters if x not in sigma.A and x != a and x != -a)
    return WhiteheadW2._trusted(rest, -a, sigma.alphabet)


@final
class MoveSet(Sequence[WhiteheadW2]):
    """
    An immutable, ordered set of W2 moves over one alphabet.

    :py:meth:`deltas` screens the whole set on a word at once: with :math:`S` the
    0/1 support matrix of the moves and :math:`M` the pair-count matrix of the
    word, row :math:`i` of :math:`(S M) \\circ (1 - S)` sums to
    :math:`(A_i + a_i).(A_i + a_i)'`.
    """
    __slots__ = ("moves", "alphabet", "_support", "_multiplier")

    moves: tuple[WhiteheadW2, ...]
    alphabet: Alphabet
    _support: np.ndarray
    _multiplier: np.ndarray

    def __init__(self, moves: Iterable[WhiteheadW2], alphabet: Alphabet, /) -> None:
        self.moves = tuple(moves)
        self.alphabet = alphabet
        self._support = np.zeros((len(self.moves), alphabet.size), dtype=np.int64)
        for i, move in enumerate(self.moves):
            self._support[i, alphabet.positions(move.support)] = 1
        self._multiplier = np.array([alphabet.position(m.a) for m in self.moves], dtype=np.int64)

    def deltas(self, w: Orbital, /) -> np.ndarray:
        """:py:func:`length_delta` of every move on ``w``."""
        if w.alphabet != self.alphabet:
            raise RankError(f"Moves act on {self.alphabet!r}, but {w!r} is over {w.alphabet!r}.")
        counts = pair_table(w).counts
        s = self._support
        cut = ((s @ counts) * (1 - s)).sum(axis=1)
        return cut - counts.sum(axis=1)[self._multiplier]

    def preserving(self, w: Orbital, /) -> list[WhiteheadW2]:
        """Moves that keep ``|w|``, in enumeration order."""
        return [self.moves[i] for i in np.flatnonzero(self.deltas(w) == 0)]

    def first_reducing(self, w: Orbital, /) -> tuple[WhiteheadW2, int] | None:
        """The first move that shortens ``w``, with its delta."""
        deltas = self.deltas(w)
        hits = np.flatnonzero(deltas < 0)
        if not len(hits):
            return None
        return self.moves[hits[0]], int(deltas[hits[0]])

    def __getitem__(self, i: Any, /) -> Any:
        return self.moves[i]

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[WhiteheadW2]:
        return iter(self.moves)

    @override
    def __repr__(self) -> str:
        return f"<MoveSet: {len(self)} moves over {self.alphabet!r}>"


def _guard(alphabet: Alphabet, override: bool, /) -> None:
    if alphabet.rank > RANK_GUARD and not override:
        raise RankGuardError(alphabet.rank, RANK_GUARD)


@func
def _all_w2(alphabet: Alphabet, /) -> tuple[WhiteheadW2, ...]:
    moves = []
    for a in alphabet.letters:
        rest = [x for x in alphabet.letters if x != a and x != -a]
        for mask in range(1 << len(rest)):
            A = frozenset(x for i, x in enumerate(rest) if mask >> i & 1)
            moves.append(WhiteheadW2._trusted(A, a, alphabet))
    return tuple(moves)


@func
def enumerate_w2(alphabet: Alphabet | int, /, *, degree: Degree | None = None, override: bool = False) -> MoveSet:
    """
    Every W2 move over ``alphabet`` (optionally only those of one degree), ordered by
    multiplier in letter order, then by subset bitmask ascending.

    >>> len(enumerate_w2(1)), len(enumerate_w2(2)), len(enumerate_w2(3))
    (2, 16, 96)
    >>> [str(m) for m in enumerate_w2(2)[:3]]
    ['({}, a)', '({b}, a)', '({B}, a)']
    >>> len(enumerate_w2(3, degree=0))
    24
    """
    alphabet = _alphabet(alphabet)
    _guard(alphabet, override)
    moves = _all_w2(alphabet)
    if degree is not None:
        moves = tuple(m for m in moves if m.degree == degree)
    return MoveSet(moves, alphabet)


@func
def enumerate_w1(alphabet: Alphabet | int, /, *, override: bool = False) -> tuple[WhiteheadW1, ...]:
    """
    Every signed permutation of the generators, identity first.

    >>> len(enumerate_w1(1)), len(enumerate_w1(2)), len(enumerate_w1(3))
    (2, 8, 48)
    """
    alphabet = _alphabet(alphabet)
    _guard(alphabet, override)
    gens = alphabet.generators
    return tuple(
        WhiteheadW1(tuple(s * g for s, g in zip(signs, perm)), alphabet)
        for perm in itertools.permutations(gens)
        for signs in itertools.product((1, -1), repeat=len(gens))
    )


__all__ = [
    "RANK_GUARD",
    "WhiteheadW2",
    "WhiteheadW1",
    "Move",
    "MoveSet",
    "make_w2",
    "apply_w2",
    "apply_w1",
    "apply",
    "length_delta",
    "degree",
    "complement",
    "enumerate_w2",
    "enumerate_w1",
]
