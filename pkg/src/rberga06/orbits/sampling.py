#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Deterministic word generators: random cyclic words and exhaustive enumeration."""
from __future__ import annotations
from collections.abc import Callable, Iterable, Iterator
import random
from .errors import SamplingError
from .words import Alphabet, CyclicWord


def random_cyclic_word(alphabet: Alphabet, length: int, rng: random.Random, /) -> CyclicWord:
    """
    A uniformly random cyclically reduced word of exactly ``length`` letters.

    >>> w = random_cyclic_word(Alphabet.of_rank(2), 9, random.Random(0))
    >>> len(w), w == random_cyclic_word(Alphabet.of_rank(2), 9, random.Random(0))
    (9, True)
    """
    letters = alphabet.letters
    if length <= 0:
        return CyclicWord.empty(alphabet)
    while True:
        w = [rng.choice(letters)]
        for _ in range(length - 1):
            w.append(rng.choice([x for x in letters if x != -w[-1]]))
        if length == 1 or w[-1] != -w[0]:
            return CyclicWord._reduce(w, alphabet)


def _reduced_sequences(alphabet: Alphabet, length: int, /) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    stack: list[tuple[int, ...]] = [(x,) for x in reversed(alphabet.letters)]
    while stack:
        w = stack.pop()
        if len(w) == length:
            yield w
            continue
        stack.extend((*w, x) for x in reversed(alphabet.letters) if x != -w[-1])


def all_cyclic_words(alphabet: Alphabet, max_length: int, /, *, min_length: int = 0) -> list[CyclicWord]:
    """
    Every cyclic word with ``min_length <= |w| <= max_length``, sorted by (length, letter order).

    >>> [w.text for w in all_cyclic_words(Alphabet.of_rank(1), 3)]
    ['', 'a', 'A', 'aa', 'AA', 'aaa', 'AAA']
    >>> len(all_cyclic_words(Alphabet.of_rank(2), 2, min_length=2))
    8
    """
    found: list[CyclicWord] = []
    for length in range(min_length, max_length + 1):
        for w in _reduced_sequences(alphabet, length):
            if length > 1 and w[-1] == -w[0]:
                continue
            word = CyclicWord._reduce(w, alphabet)
            if word.letters == w:
                found.append(word)
    return sorted(found, key=lambda w: w.key)


def sample_words(
    alphabet: Alphabet,
    lengths: Iterable[int],
    count: int,
    rng: random.Random,
    /, *,
    accept: Callable[[CyclicWord], bool] = lambda _: True,
    budget: int = 200,
    strict: bool = True,
) -> dict[int, list[CyclicWord]]:
    """
    Up to ``count`` distinct accepted words of each length, drawn with ``count * budget`` attempts per length.

    With ``strict``, a length that yields no accepted word raises :py:class:`SamplingError`.
    """
    sampled: dict[int, list[CyclicWord]] = {}
    for length in lengths:
        words: list[CyclicWord] = []
        seen: set[CyclicWord] = set()
        for _ in range(count * budget):
            if len(words) >= count:
                break
            w = random_cyclic_word(alphabet, length, rng)
            if w in seen:
                continue
            seen.add(w)
            if accept(w):
                words.append(w)
        if strict and not words:
            raise SamplingError(f"No acceptable word of length {length} over {alphabet!r} in {count * budget} attempts.")
        sampled[length] = words
    return sampled


__all__ = [
    "random_cyclic_word",
    "all_cyclic_words",
    "sample_words",
]
