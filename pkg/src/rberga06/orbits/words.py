#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Alphabets, cyclic words, reduction, canonical forms and pair counts."""
from __future__ import annotations
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
import re
from typing_extensions import Any, Self, final, override
import networkx as nx
import numpy as np
from pydantic import StrictInt, TypeAdapter, ValidationError
from .cache import func
from .errors import RankError, WordSyntaxError
from .types import Letter, SupportsPydanticV2, letter_char, letter_key, letter_label


@final
class Alphabet:
    """
    A finite set of generators, together with their inverses.

    Letters are listed in letter order (:math:`x_1, x_1^{-1}, x_2, \\dots`);
    the position of a letter in :py:attr:`letters` indexes pair-count matrices.

    >>> Alphabet.of_rank(2).letters
    (1, -1, 2, -2)
    >>> Alphabet.markers(2, 1).generators
    (1, 2, 3, 5, 7)
    """
    __slots__ = ("generators", "letters", "_position")

    generators: tuple[int, ...]
    letters: tuple[Letter, ...]
    _position: dict[Letter, int]

    def __init__(self, generators: Iterable[int], /) -> None:
        gens = tuple(sorted(set(generators)))
        if not gens or gens[0] < 1:
            raise RankError(f"Invalid generator indices: {gens!r}.")
        self.generators = gens
        self.letters = tuple(s * g for g in gens for s in (1, -1))
        self._position = {x: i for i, x in enumerate(self.letters)}

    @staticmethod
    @func
    def of_rank(rank: int, /) -> Alphabet:
        """The standard alphabet :math:`\\{x_1, \\dots, x_n\\}^{\\pm 1}`."""
        if rank < 1:
            raise RankError(f"Rank must be positive, not {rank}.")
        return Alphabet(range(1, rank + 1))

    @staticmethod
    @func
    def markers(n: int, k: int, /) -> Alphabet:
        """The marker alphabet for rank ``n`` and cut index ``k``: :math:`x_1..x_n` plus :math:`x_{n+j}, x_{2n+j}, x_{3n+j}` for :math:`j \\le k`."""
        return Alphabet([
            *range(1, n + 1),
            *(m * n + j for m in (1, 2, 3) for j in range(1, k + 1)),
        ])

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def is_standard(self) -> bool:
        return self.generators[-1] == self.rank

    def position(self, x: Letter, /) -> int:
        """Index of ``x`` in :py:attr:`letters`."""
        try:
            return self._position[x]
        except KeyError:
            raise RankError(f"Letter {letter_label(x)} is not in {self!r}.") from None

    def positions(self, letters: Iterable[Letter], /) -> list[int]:
        return [self.position(x) for x in letters]

    def check(self, letters: Iterable[Letter], /) -> None:
        """Raise :py:class:`RankError` unless every letter belongs to this alphabet."""
        for x in letters:
            if x not in self._position:
                raise RankError(f"Letter {letter_label(x)} is not in {self!r}.")

    def __contains__(self, x: object, /) -> bool:
        return x in self._position

    @override
    def __eq__(self, other: object, /) -> bool:
        return isinstance(other, Alphabet) and self.generators == other.generators

    @override
    def __hash__(self) -> int:
        return hash(self.generators)

    @override
    def __repr__(self) -> str:
        if self.is_standard:
            return f"Alphabet.of_rank({self.rank})"
        return f"Alphabet({list(self.generators)!r})"


def _free_reduce(letters: Iterable[Letter], /) -> list[Letter]:
    stack: list[Letter] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return stack


def _cyclic_reduce(letters: Iterable[Letter], /) -> list[Letter]:
    w = _free_reduce(letters)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def _least_rotation(letters: Sequence[Letter], /) -> tuple[Letter, ...]:
    if not letters:
        return ()
    keys = [letter_key(x) for x in letters]
    first = min(keys)
    starts = [i for i, k in enumerate(keys) if k == first]
    if len(starts) > 1:
        best = min(starts, key=lambda i: keys[i:] + keys[:i])
    else:
        best = starts[0]
    return (*letters[best:], *letters[:best])


_LABELS = re.compile(r"\s*x(\d+)('?)\s*")
_JSON_LETTERS = TypeAdapter(list[StrictInt])
_JSON_INTS = re.compile(r"-?\d+")


def parse_letters(text: str, /) -> list[Letter]:
    """
    Parse any of the accepted spellings into raw signed letters (no reduction).

    >>> parse_letters("aabAB")
    [1, 1, 2, -1, -2]
    >>> parse_letters("[1, -3]")
    [1, -3]
    >>> parse_letters("x1 x7 x2'")
    [1, 7, -2]
    """
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            letters = _JSON_LETTERS.validate_json(stripped)
        except ValidationError as err:
            raise WordSyntaxError(text, text.index("["), "malformed JSON array") from err
        if 0 in letters:
            zero = next(m for m in _JSON_INTS.finditer(text) if int(m.group()) == 0)
            raise WordSyntaxError(text, zero.start(), "0 is not a letter")
        return letters
    if any(c.isdigit() for c in stripped):
        letters, pos = [], 0
        while pos < len(text):
            if (m := _LABELS.match(text, pos)) is None:
                raise WordSyntaxError(text, pos)
            index = int(m.group(1))
            if index == 0:
                raise WordSyntaxError(text, pos, "x0 is not a letter")
            letters.append(-index if m.group(2) else index)
            pos = m.end()
        return letters
    letters = []
    for pos, c in enumerate(text):
        if c.isspace():
            continue
        if "a" <= c <= "z":
            letters.append(ord(c) - ord("a") + 1)
        elif "A" <= c <= "Z":
            letters.append(ord("A") - ord(c) - 1)
        else:
            raise WordSyntaxError(text, pos)
    return letters


@final
class CyclicWord(SupportsPydanticV2["CyclicWord | str | Sequence[int]"]):
    """
    A cyclically reduced word, stored in its canonical rotation.

    Instances are immutable values: equal iff they are rotations of each other
    over the same alphabet.

    >>> w = CyclicWord([2, 1, -2, 1, 1], 2)
    >>> w.letters, str(w)
    ((1, 1, 2, 1, -2), 'aabaB')
    >>> CyclicWord([1, 2, -1], 2) == CyclicWord([2], 2)
    True
    """
    __slots__ = ("letters", "alphabet", "_hash")

    letters: tuple[Letter, ...]
    alphabet: Alphabet
    _hash: int

    def __init__(self, letters: Iterable[Letter], alphabet: Alphabet | int, /) -> None:
        if isinstance(alphabet, int):
            alphabet = Alphabet.of_rank(alphabet)
        letters = list(letters)
        alphabet.check(letters)
        self.letters = _least_rotation(_cyclic_reduce(letters))
        self.alphabet = alphabet
        self._hash = hash(self.letters)

    @classmethod
    def _trusted(cls, letters: tuple[Letter, ...], alphabet: Alphabet, /) -> Self:
        """Wrap letters already known to be reduced and canonical."""
        self = object.__new__(cls)
        self.letters = letters
        self.alphabet = alphabet
        self._hash = hash(letters)
        return self

    @classmethod
    def _reduce(cls, letters: Iterable[Letter], alphabet: Alphabet, /) -> Self:
        """Reduce and canonicalize letters already known to lie in ``alphabet``."""
        return cls._trusted(_least_rotation(_cyclic_reduce(letters)), alphabet)

    @classmethod
    def empty(cls, alphabet: Alphabet | int, /) -> Self:
        return cls((), alphabet)

    @property
    def rank(self) -> int:
        return self.alphabet.rank

    @property
    def text(self) -> str:
        """Letter spelling (``aabAB``), or indexed labels when some index exceeds 26."""
        if all(abs(x) <= 26 for x in self.letters):
            return "".join(map(letter_char, self.letters))
        return " ".join(map(letter_label, self.letters))

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        """Deterministic sort key: length first, then letter order."""
        return len(self.letters), tuple(map(letter_key, self.letters))

    def to_json(self) -> list[int]:
        return list(self.letters)

    def rotations(self) -> Iterator[tuple[Letter, ...]]:
        """Every rotation of the stored letters, starting with the canonical one."""
        w = self.letters
        for i in range(len(w)):
            yield (*w[i:], *w[:i])

    def occurrences(self, i: int, /) -> int:
        """Number of positions holding :math:`x_i^{\\pm 1}`."""
        return sum(1 for x in self.letters if abs(x) == i)

    def counts(self) -> Counter[int]:
        """Occurrence counts of every generator (generators that do not occur are omitted)."""
        return Counter(abs(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    @override
    def __eq__(self, other: object, /) -> bool:
        return (
            isinstance(other, CyclicWord)
            and self._hash == other._hash
            and self.letters == other.letters
            and self.alphabet == other.alphabet
        )

    @override
    def __hash__(self) -> int:
        return self._hash

    @override
    def __str__(self) -> str:
        return self.text

    @override
    def __repr__(self) -> str:
        return f"CyclicWord({self.text!r}, {self.alphabet!r})"

    @classmethod
    @override
    def validate(cls, obj: CyclicWord | str | Sequence[int], /) -> Self:
        if isinstance(obj, cls):
            return obj
        letters = parse_letters(obj) if isinstance(obj, str) else [int(x) for x in obj]
        return cls(letters, max((abs(x) for x in letters), default=1))


@final
class WordTuple:
    """
    An ordered tuple of cyclic words over one alphabet, treated as a single state.

    Its length is the total length of its entries; pair tables and occurrence
    counts are summed over the entries.
    """
    __slots__ = ("words", "alphabet", "_hash")

    words: tuple[CyclicWord, ...]
    alphabet: Alphabet
    _hash: int

    def __init__(self, words: Iterable[CyclicWord], alphabet: Alphabet | None = None, /) -> None:
        words = tuple(words)
        if alphabet is None:
            if not words:
                raise RankError("Cannot infer the alphabet of an empty word tuple.")
            alphabet = words[0].alphabet
        for w in words:
            if w.alphabet != alphabet:
                raise RankError(f"Word {w} is over {w.alphabet!r}, expected {alphabet!r}.")
        self.words = words
        self.alphabet = alphabet
        self._hash = hash(words)

    @property
    def total_length(self) -> int:
        return sum(map(len, self.words))

    @property
    def cyclic_key(self) -> tuple[tuple[Letter, ...], ...]:
        """Key identifying the tuple up to cyclic rotation of its entries."""
        entries = [w.letters for w in self.words]
        if not entries:
            return ()
        return min(tuple(entries[i:] + entries[:i]) for i in range(len(entries)))

    def occurrences(self, i: int, /) -> int:
        return sum(w.occurrences(i) for w in self.words)

    def counts(self) -> Counter[int]:
        total: Counter[int] = Counter()
        for w in self.words:
            total.update(w.counts())
        return total

    def to_json(self) -> list[list[int]]:
        return [w.to_json() for w in self.words]

    def __len__(self) -> int:
        return self.total_length

    def __iter__(self) -> Iterator[CyclicWord]:
        return iter(self.words)

    @override
    def __eq__(self, other: object, /) -> bool:
        return isinstance(other, WordTuple) and self._hash == other._hash and self.words == other.words

    @override
    def __hash__(self) -> int:
        return self._hash

    @override
    def __str__(self) -> str:
        return "(" + ", ".join(w.text for w in self.words) + ")"

    @override
    def __repr__(self) -> str:
        return f"WordTuple({str(self)!r}, {self.alphabet!r})"


Orbital = CyclicWord | WordTuple
"""Anything the orbit engine can walk: a single cyclic word or a word tuple."""


def cyclic_reduce(letters: Iterable[Letter], alphabet: Alphabet | int | None = None, /) -> CyclicWord:
    """
    Freely and cyclically reduce ``letters``; the result is canonical.

    Without an alphabet, the rank is the largest generator index (at least 1).

    >>> cyclic_reduce([1, 2, -2, 1]).letters
    (1, 1)
    >>> len(cyclic_reduce([1, -1]))
    0
    """
    letters = list(letters)
    if alphabet is None:
        alphabet = max((abs(x) for x in letters), default=1)
    return CyclicWord(letters, alphabet)


def canonical_form(w: CyclicWord | Sequence[Letter], alphabet: Alphabet | int | None = None, /) -> CyclicWord:
    """
    Canonical representative of the rotation class of a cyclically reduced word.

    >>> canonical_form([2, 1]).letters
    (1, 2)
    """
    if isinstance(w, CyclicWord):
        return w
    if _cyclic_reduce(w) != list(w):
        raise ValueError(f"Not cyclically reduced: {list(w)!r}.")
    return cyclic_reduce(w, alphabet)


def inverse_word(w: CyclicWord, /) -> CyclicWord:
    """The inverse conjugacy class."""
    return CyclicWord([-x for x in reversed(w.letters)], w.alphabet)


def parse_word(text: str, rank: int, /) -> CyclicWord:
    """
    Parse ``text`` as a cyclic word of the free group of rank ``rank``.

    >>> parse_word("aab", 2).letters
    (1, 1, 2)
    >>> parse_word("abA", 2).letters
    (2,)
    >>> parse_word("[1, 1, 2, -1, -2]", 2).text
    'aabAB'
    """
    alphabet = Alphabet.of_rank(rank)
    return CyclicWord(parse_letters(text), alphabet)


@final
@dataclass(frozen=True, slots=True, eq=False)
class PairCountTable:
    """
    The pair counts :math:`x.y` of a fixed word (or word tuple).

    ``counts[i, j]`` is the number of cyclic occurrences of the subwords
    :math:`xy^{-1}` and :math:`yx^{-1}` where ``x, y`` are the letters at positions
    ``i, j`` of the alphabet. The matrix is symmetric with zero diagonal on reduced
    words, and its row at :math:`a` sums to the number of :math:`a^{\\pm 1}` in the word.
    """
    alphabet: Alphabet
    counts: np.ndarray
    source_length: int

    def __call__(self, x: Letter, y: Letter, /) -> int:
        p = self.alphabet.position
        return int(self.counts[p(x), p(y)])

    def sets(self, A: Iterable[Letter], B: Iterable[Letter], /) -> int:
        """:math:`A.B`"""
        rows, cols = self.alphabet.positions(A), self.alphabet.positions(B)
        if not rows or not cols:
            return 0
        return int(self.counts[np.ix_(rows, cols)].sum())

    def total(self, a: Letter, /) -> int:
        """:math:`a.\\Sigma`"""
        return int(self.counts[self.alphabet.position(a)].sum())


def _word_counts(w: CyclicWord, /) -> np.ndarray:
    size = w.alphabet.size
    counts = np.zeros((size, size), dtype=np.int64)
    if w.letters:
        letters = w.letters
        after = (*letters[1:], letters[0])
        rows = w.alphabet.positions(letters)
        cols = w.alphabet.positions(-y for y in after)
        np.add.at(counts, (rows, cols), 1)
        np.add.at(counts, (cols, rows), 1)
    return counts


def pair_table(w: Orbital, /) -> PairCountTable:
    """
    Pair counts of ``w`` (summed over the entries of a word tuple).

    >>> t = pair_table(CyclicWord([1, 2, -1, -2], 2))
    >>> t(1, 2), t(2, 1), t.total(1)
    (1, 1, 2)
    """
    if isinstance(w, WordTuple):
        size = w.alphabet.size
        counts = sum((_word_counts(v) for v in w.words), np.zeros((size, size), dtype=np.int64))
    else:
        counts = _word_counts(w)
    return PairCountTable(w.alphabet, counts, len(w))


def pair_count(w: Orbital, x: Letter, y: Letter, /) -> int:
    """:math:`x.y` on ``w``."""
    return pair_table(w)(x, y)


def set_pair_count(w: Orbital, A: Iterable[Letter], B: Iterable[Letter], /) -> int:
    """:math:`A.B` on ``w``."""
    return pair_table(w).sets(A, B)


def occurrence_count(w: Orbital, i: int, /) -> int:
    """
    Number of :math:`x_i^{\\pm 1}` in ``w``.

    >>> occurrence_count(parse_word("aabbbccccddddd", 4), 3)
    4
    """
    return w.occurrences(i)


def whitehead_graph(w: CyclicWord, /) -> nx.MultiGraph:
    """
    The Whitehead graph of ``w``: vertices are the letters, with one edge
    :math:`x - y` for each cyclic occurrence of :math:`xy^{-1}` (so :math:`x.y` edges
    join ``x`` and ``y``, and the degree of :math:`a` is :math:`a.\\Sigma`).
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(w.alphabet.letters)
    letters = w.letters
    for x, y in zip(letters, (*letters[1:], *letters[:1])):
        graph.add_edge(x, -y)
    return graph


__all__ = [
    "Alphabet",
    "CyclicWord",
    "WordTuple",
    "Orbital",
    "PairCountTable",
    "parse_letters",
    "parse_word",
    "cyclic_reduce",
    "canonical_form",
    "inverse_word",
    "pair_table",
    "pair_count",
    "set_pair_count",
    "occurrence_count",
    "whitehead_graph",
]
