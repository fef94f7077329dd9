#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Level sets N(u), degree-restricted orbits N_k(u) and the counting bounds built on them."""
from __future__ import annotations
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
import logging
from math import comb, factorial, prod
from typing import NamedTuple
from typing_extensions import TYPE_CHECKING, final
from .chains import MoveChain
from .errors import NotMinimalError
from .logs import traced
from .moves import MoveSet, WhiteheadW2, apply_w1, apply_w2, enumerate_w1, enumerate_w2
from .types import Degree, Letter, one_sided
from .words import CyclicWord, Orbital, pair_table

if TYPE_CHECKING:
    from .store import LevelSetStore


_log = logging.getLogger(__name__)


def is_minimal(u: CyclicWord, /, *, override: bool = False) -> bool:
    """
    Whether no W2 move shortens ``u`` (equivalently, ``u`` has minimum length in its orbit).

    >>> is_minimal(CyclicWord([1, 1, 2, 2, 2], 2)), is_minimal(CyclicWord([1, 1, 2], 2))
    (True, False)
    """
    return enumerate_w2(u.alphabet, override=override).first_reducing(u) is None


def require_minimal(u: CyclicWord, /, *, override: bool = False) -> None:
    """Raise :py:class:`NotMinimalError` (with a shortening move) unless ``u`` is minimal."""
    hit = enumerate_w2(u.alphabet, override=override).first_reducing(u)
    if hit is not None:
        raise NotMinimalError(u, *hit)


@traced
def minimize(w: CyclicWord, /, *, override: bool = False) -> tuple[CyclicWord, MoveChain]:
    """
    Greedy Whitehead minimization: repeatedly apply the first shortening move.

    >>> v, chain = minimize(CyclicWord([1, 1, 2], 2))
    >>> v.text, len(chain)
    ('b', 2)
    """
    moves = enumerate_w2(w.alphabet, override=override)
    steps: list[WhiteheadW2] = []
    while (hit := moves.first_reducing(w)) is not None:
        move, delta = hit
        _log.debug(f"{move} shortens {w} by {-delta}")
        w = apply_w2(move, w)
        steps.append(move)
    return w, MoveChain(tuple(steps))


def closure(start: Orbital, moves: MoveSet, /) -> frozenset[Orbital]:
    """Breadth-first closure of ``{start}`` under the moves of ``moves`` that keep the length."""
    seen: set[Orbital] = {start}
    queue: deque[Orbital] = deque([start])
    expanded = 0
    while queue:
        w = queue.popleft()
        for move in moves.preserving(w):
            v = apply_w2(move, w)
            if v not in seen:
                seen.add(v)
                queue.append(v)
        expanded += 1
        if expanded % 10_000 == 0:
            _log.debug(f"closure of {start}: {expanded} states expanded, {len(seen)} found, {len(queue)} queued")
    return frozenset(seen)


def _sorted(words: Iterable[CyclicWord], /) -> list[CyclicWord]:
    return sorted(words, key=lambda w: w.key)


@final
@dataclass(frozen=True, slots=True, eq=False)
class LevelSet:
    """
    :math:`\\Omega(u)`: every word of the orbit of ``base`` with the same (minimum) length.

    ``core`` is the part reachable from ``base`` through length-preserving W2 moves
    alone; ``members`` closes it under relabelings (W1 moves).
    """
    base: CyclicWord
    core: frozenset[CyclicWord]
    members: frozenset[CyclicWord]

    @property
    def count(self) -> int:
        """:math:`N(u)`"""
        return len(self.members)

    def sorted_members(self) -> list[CyclicWord]:
        return _sorted(self.members)

    def sorted_core(self) -> list[CyclicWord]:
        return _sorted(self.core)

    def __contains__(self, w: object, /) -> bool:
        return w in self.members

    def __iter__(self) -> Iterator[CyclicWord]:
        return iter(self.sorted_members())

    def __len__(self) -> int:
        return self.count


@traced
def level_set(u: CyclicWord, /, *, store: LevelSetStore | None = None, override: bool = False) -> LevelSet:
    """
    The level set of a minimal word.

    >>> level_set(CyclicWord([1], 2)).count
    4
    >>> level_set(CyclicWord([1, 2, -1, -2], 2)).count
    2
    """
    require_minimal(u, override=override)
    if store is not None and (cached := store.load(u)) is not None:
        core, members = cached
        return LevelSet(u, core, members)
    core = closure(u, enumerate_w2(u.alphabet, override=override))
    relabel = enumerate_w1(u.alphabet, override=override)
    members = frozenset(apply_w1(pi, v) for pi in relabel for v in core)
    _log.info(f"N({u}) = {len(members)} ({len(core)} words W2-reachable)")
    result = LevelSet(u, core, members)
    if store is not None:
        store.save(result)
    return result


@final
@dataclass(frozen=True, slots=True, eq=False)
class DegreeOrbit:
    """:math:`\\Omega_k(u)`: words reachable from ``base`` through length-preserving W2 moves of degree exactly ``k``."""
    base: Orbital
    k: Degree
    members: frozenset[Orbital]

    @property
    def count(self) -> int:
        """:math:`N_k(u)`"""
        return len(self.members)

    def __contains__(self, w: object, /) -> bool:
        return w in self.members

    def __len__(self) -> int:
        return self.count


@traced
def degree_restricted_orbit(u: Orbital, k: Degree, /, *, override: bool = False) -> DegreeOrbit:
    """
    :math:`\\Omega_k(u)`, always containing ``u`` itself.

    Single words must be minimal; word tuples (marker sequences) are walked as given.

    >>> u = CyclicWord([1], 2)
    >>> degree_restricted_orbit(u, 0).count, degree_restricted_orbit(u, 1).count
    (1, 1)
    """
    if isinstance(u, CyclicWord):
        require_minimal(u, override=override)
    moves = enumerate_w2(u.alphabet, degree=k, override=override)
    return DegreeOrbit(u, k, closure(u, moves))


class ProductBound(NamedTuple):
    N: int
    N_k: tuple[int, ...]
    C: int

    @property
    def bound(self) -> int:
        return self.C * prod(self.N_k)

    @property
    def ok(self) -> bool:
        return self.N <= self.bound


@traced
def product_bound_check(u: CyclicWord, /, *, store: LevelSetStore | None = None, override: bool = False) -> ProductBound:
    """
    Compare :math:`N(u)` with :math:`C \\prod_{k<n} N_k(u)`, where :math:`C = 2^n n!`.

    >>> product_bound_check(CyclicWord([1], 2))
    ProductBound(N=4, N_k=(1, 1), C=8)
    """
    n = u.rank
    N = level_set(u, store=store, override=override).count
    N_k = tuple(degree_restricted_orbit(u, k, override=override).count for k in range(n))
    result = ProductBound(N, N_k, len(enumerate_w1(u.alphabet, override=override)))
    if not result.ok:
        _log.warning(f"N({u}) = {N} exceeds C * prod N_k = {result.bound}")
    return result


class Lemma22Violation(NamedTuple):
    move: WhiteheadW2
    letter: Letter | None
    multiplier_count: int
    letter_count: int


def lemma22_violations(u: CyclicWord, /, *, override: bool = False) -> list[Lemma22Violation]:
    """
    Length-preserving moves :math:`(A, a)` on ``u`` breaking either
    :math:`a.\\Sigma > b.\\Sigma` for every one-sided :math:`b \\in A`, or
    :math:`\\deg (A, a) \\le n - 1` (reported with ``letter=None``).

    Expected empty when ``u`` is minimal, every generator occurs, and occurrence counts increase strictly.

    >>> lemma22_violations(CyclicWord([1, 1, 2, 2, 2], 2))
    []
    """
    table = pair_table(u)
    found = []
    for move in enumerate_w2(u.alphabet, override=override).preserving(u):
        a_count = table.total(move.a)
        if move.degree > u.rank - 1:
            found.append(Lemma22Violation(move, None, a_count, 0))
        for b in one_sided(move.A):
            if a_count <= (b_count := table.total(b)):
                found.append(Lemma22Violation(move, b, a_count, b_count))
    return found


def syllable_count_bound(n: int, length: int, /) -> int:
    """
    :math:`(n-1)! + (n-1)! \\binom{r}{n-2} |u|^{n-2}` with :math:`r = n 2^n` degree-0 moves:
    an upper bound for :math:`N_0(u)`.

    >>> syllable_count_bound(2, 5), syllable_count_bound(3, 10)
    (2, 482)
    """
    if n < 2:
        return 1
    r = n * 2 ** n
    f = factorial(n - 1)
    return f + f * comb(r, n - 2) * length ** (n - 2)


def polynomial_degree(n: int, /) -> int:
    """
    Degree in :math:`|u|` of the polynomial bound on :math:`N(u)`: :math:`n(5n-7)/2`.

    >>> [polynomial_degree(n) for n in (2, 3, 4)]
    [3, 12, 26]
    """
    return n * (5 * n - 7) // 2


__all__ = [
    "is_minimal",
    "require_minimal",
    "minimize",
    "closure",
    "LevelSet",
    "level_set",
    "DegreeOrbit",
    "degree_restricted_orbit",
    "ProductBound",
    "product_bound_check",
    "Lemma22Violation",
    "lemma22_violations",
    "syllable_count_bound",
    "polynomial_degree",
]
