#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Letter dependence, the dependence graph, syllables, and the standing hypotheses."""
from __future__ import annotations
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
import itertools
import json
import logging
from typing import NamedTuple
from typing_extensions import TYPE_CHECKING, Any, final, override
import networkx as nx
from .errors import EmptyWordError, PreconditionError, RankError
from .logs import traced
from .moves import WhiteheadW2, enumerate_w2
from .orbits import LevelSet, level_set, require_minimal
from .reports import HypothesisReport
from .types import Letter, letter_label, one_sided, pm
from .words import Alphabet, CyclicWord

if TYPE_CHECKING:
    from .store import LevelSetStore


_log = logging.getLogger(__name__)


@final
@dataclass(frozen=True, slots=True, eq=False)
class AdmissibleMoveIndex:
    """
    Every W2 move that keeps the length of some member of a level set,
    each with the first such member (in member order) as its witness.
    """
    alphabet: Alphabet
    witnesses: Mapping[WhiteheadW2, CyclicWord]

    @property
    def moves(self) -> frozenset[WhiteheadW2]:
        return frozenset(self.witnesses)

    def __contains__(self, move: object, /) -> bool:
        return move in self.witnesses

    def __iter__(self) -> Iterator[WhiteheadW2]:
        return iter(self.witnesses)

    def __len__(self) -> int:
        return len(self.witnesses)


def admissible_moves(ls: LevelSet | Iterable[CyclicWord], /) -> AdmissibleMoveIndex:
    """
    Index the length-preserving moves of a level set's W2-reachable part (or of explicit words).

    >>> idx = admissible_moves(level_set(CyclicWord([1], 2)))
    >>> WhiteheadW2([], 2, 2) in idx, WhiteheadW2([1], 2, 2) in idx
    (True, False)
    """
    words = ls.sorted_core() if isinstance(ls, LevelSet) else sorted(ls, key=lambda w: w.key)
    if not words:
        raise EmptyWordError("Cannot index the moves of an empty level set.")
    alphabet = words[0].alphabet
    moves = enumerate_w2(alphabet)
    witnesses: dict[WhiteheadW2, CyclicWord] = {}
    for v in words:
        for move in moves.preserving(v):
            witnesses.setdefault(move, v)
    _log.debug(f"{len(witnesses)} admissible moves over {len(words)} words")
    return AdmissibleMoveIndex(alphabet, witnesses)


class Dependence(NamedTuple):
    holds: bool
    vacuous: bool
    counterexample: WhiteheadW2 | None


def dependence(x: Letter, y: Letter, idx: AdmissibleMoveIndex, /) -> Dependence:
    """
    Whether ``x`` depends on ``y``: every indexed :math:`(A, a)` with
    :math:`a \\notin \\{x^{\\pm 1}, y^{\\pm 1}\\}` and :math:`A \\cap \\{y^{\\pm 1}\\} \\neq \\emptyset`
    has :math:`\\{x^{\\pm 1}\\} \\subseteq A`.

    ``vacuous`` is set when no indexed move meets the hypothesis; otherwise a
    failing relation carries a counterexample move.
    """
    if abs(x) == abs(y):
        raise ValueError(f"Dependence needs two distinct generators, not {letter_label(x)} and {letter_label(y)}.")
    xs, ys = pm(x), pm(y)
    qualifying = False
    for move in idx:
        if move.a in xs or move.a in ys or not move.A & ys:
            continue
        qualifying = True
        if not xs <= move.A:
            return Dependence(False, False, move)
    return Dependence(True, not qualifying, None)


def depends_on(x: Letter, y: Letter, idx: AdmissibleMoveIndex, /) -> bool:
    """
    :py:func:`dependence`, as a plain boolean.

    >>> u = CyclicWord([1, 1, 2, 2, 2], 2)
    >>> idx = admissible_moves(level_set(u))
    >>> depends_on(1, 2, idx), depends_on(2, 1, idx)
    (True, True)
    """
    return dependence(x, y, idx).holds


@final
@dataclass(frozen=True, slots=True, eq=False)
class DependenceGraph:
    """
    :math:`\\Gamma_u`: letters joined when inverse to each other or when one depends on the other.

    Edges carry ``kind`` (``"inverse"`` or ``"dependence"``) and ``vacuous``.
    Components are labelled by the least generator index they contain, so
    :py:meth:`component` ``(i)`` names :math:`C_i`.
    """
    alphabet: Alphabet
    graph: nx.Graph
    labels: Mapping[Letter, int] = field(init=False)

    def __post_init__(self) -> None:
        labels: dict[Letter, int] = {}
        for part in nx.connected_components(self.graph):
            label = min(abs(x) for x in part)
            labels.update(dict.fromkeys(part, label))
        object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return self.alphabet.rank

    @property
    def components(self) -> dict[int, frozenset[Letter]]:
        """Components by label, in label order."""
        parts: dict[int, set[Letter]] = {}
        for x, label in self.labels.items():
            parts.setdefault(label, set()).add(x)
        return {label: frozenset(parts[label]) for label in sorted(parts)}

    def component(self, i: int, /) -> int:
        """The label of :math:`C_i`, the component containing :math:`x_i`."""
        try:
            return self.labels[i]
        except KeyError:
            raise RankError(f"x{i} is not in {self.alphabet!r}.") from None

    def label(self, x: Letter, /) -> int:
        return self.labels[x]

    def edges(self) -> frozenset[tuple[frozenset[Letter], str]]:
        return frozenset((frozenset((x, y)), kind) for x, y, kind in self.graph.edges(data="kind"))

    def to_dot(self) -> str:
        """Graphviz source: dependence edges solid, inverse edges dashed, vacuous edges labelled."""
        lines = ["graph dependence {"]
        for x in self.alphabet.letters:
            lines.append(f'  "{letter_label(x)}";')
        for x, y, data in sorted(self.graph.edges(data=True), key=lambda e: (self.alphabet.position(e[0]), self.alphabet.position(e[1]))):
            attrs = ["style=dashed"] if data["kind"] == "inverse" else ["style=solid"]
            if data.get("vacuous"):
                attrs.append('label="vacuous"')
            lines.append(f'  "{letter_label(x)}" -- "{letter_label(y)}" [{", ".join(attrs)}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict[str, Any]:
        edges = [
            {"u": x, "v": y, "kind": data["kind"], "vacuous": bool(data.get("vacuous"))}
            for x, y, data in self.graph.edges(data=True)
        ]
        edges.sort(key=lambda e: (self.alphabet.position(e["u"]), self.alphabet.position(e["v"])))
        return {
            "schema": 1,
            "rank": self.rank,
            "vertices": list(self.alphabet.letters),
            "edges": edges,
            "components": {str(label): sorted(part, key=self.alphabet.position) for label, part in self.components.items()},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @override
    def __eq__(self, other: object, /) -> bool:
        return isinstance(other, DependenceGraph) and self.alphabet == other.alphabet and self.edges() == other.edges()

    __hash__ = None  # type: ignore[assignment]

    @override
    def __str__(self) -> str:
        return ", ".join(
            "C_" + "=C_".join(str(i) for i in sorted({abs(x) for x in part}))
            for part in self.components.values()
        )


def graph_from_index(idx: AdmissibleMoveIndex, /) -> DependenceGraph:
    """Build :math:`\\Gamma` from a complete admissible-move index."""
    alphabet = idx.alphabet
    graph = nx.Graph()
    graph.add_nodes_from(alphabet.letters)
    for i in alphabet.generators:
        graph.add_edge(i, -i, kind="inverse", vacuous=False)
    for i, j in itertools.combinations(alphabet.generators, 2):
        forward, backward = dependence(j, i, idx), dependence(i, j, idx)
        if forward.holds != backward.holds:
            _log.warning(f"Asymmetric dependence between x{i} and x{j}")
        if forward.holds or backward.holds:
            vacuous = (forward.holds and forward.vacuous) or (backward.holds and backward.vacuous)
            for x, y in itertools.product(pm(i), pm(j)):
                graph.add_edge(x, y, kind="dependence", vacuous=vacuous)
    return DependenceGraph(alphabet, graph)


def _level_of(u: CyclicWord, ls: LevelSet | None, store: LevelSetStore | None, /) -> LevelSet:
    """``ls`` if it is the level set of ``u``, else build it; a prebuilt one must W2-reach ``u``."""
    if ls is None:
        return level_set(u, store=store)
    if u not in ls.core:
        # the guard already passed when ``ls`` was built
        require_minimal(u, override=True)
        raise PreconditionError(f"{u} is not W2-reachable from {ls.base}: not its level set.")
    return ls


@traced
def dependence_graph(u: CyclicWord, /, *, ls: LevelSet | None = None, store: LevelSetStore | None = None) -> DependenceGraph:
    """
    :math:`\\Gamma_u` of a minimal word.

    >>> str(dependence_graph(CyclicWord([1, 1, 2, 2, 2], 2)))
    'C_1=C_2'
    """
    return graph_from_index(admissible_moves(_level_of(u, ls, store)))


@final
@dataclass(frozen=True, slots=True)
class SyllableDecomposition:
    """
    The unique cyclic factorization of a word into maximal single-component runs.

    ``factors`` start at a component boundary of the canonical rotation; ``lengths``
    maps every component label to its syllable length :math:`|w|_{C}`.
    """
    factors: tuple[tuple[tuple[Letter, ...], int], ...]
    lengths: Mapping[int, int]

    def concatenation(self) -> tuple[Letter, ...]:
        return tuple(x for segment, _ in self.factors for x in segment)


def syllable_decompose(w: CyclicWord, g: DependenceGraph, /) -> SyllableDecomposition:
    """
    Split ``w`` into syllables over the components of ``g``.

    >>> g = dependence_graph(CyclicWord([1, 1, 2, 2, 2], 2))
    >>> syllable_decompose(CyclicWord([1, 2, 1, 2, 2], 2), g).factors
    (((1, 2, 1, 2, 2), 1),)
    """
    if not w:
        raise EmptyWordError("The empty word has no syllables.")
    if w.alphabet != g.alphabet:
        raise RankError(f"{w!r} is not over {g.alphabet!r}.")
    letters = w.letters
    labels = [g.label(x) for x in letters]
    boundaries = [i for i in range(len(letters)) if labels[i] != labels[i - 1]]
    start = boundaries[0] if boundaries else 0
    order = [*range(start, len(letters)), *range(start)]
    factors = tuple(
        (tuple(letters[i] for i in run), label)
        for label, run in ((label, list(run)) for label, run in itertools.groupby(order, key=labels.__getitem__))
    )
    lengths = dict.fromkeys(sorted(set(g.labels.values())), 0)
    for _, label in factors:
        lengths[label] += 1
    return SyllableDecomposition(factors, lengths)


def syllable_length(w: CyclicWord, g: DependenceGraph, i: int, /) -> int:
    """:math:`|w|_{C_i}`"""
    return syllable_decompose(w, g).lengths[g.component(i)]


def syllable_sum(w: CyclicWord, g: DependenceGraph, /) -> int:
    """
    :math:`|w|_s = \\sum_{i=1}^n |w|_{C_i}` (a component shared by several generators counts once per generator).

    >>> g = dependence_graph(CyclicWord([1, 1, 2, 2, 2], 2))
    >>> syllable_sum(CyclicWord([1, 1, 2, 2, 2], 2), g)
    2
    """
    lengths = syllable_decompose(w, g).lengths
    return sum(lengths[g.component(i)] for i in g.alphabet.generators)


def check_hyp_1_1(u: CyclicWord, /) -> HypothesisReport:
    """
    (i) no W2 move shortens ``u``; (ii) among the generators occurring in ``u``,
    occurrence counts increase strictly with the index.

    >>> r = check_hyp_1_1(CyclicWord([1, 2, -1, -2], 2))
    >>> r.hyp_1_1_i, r.hyp_1_1_ii, r.witnesses["hyp_1_1_ii"]
    (True, False, {'generators': [1, 2], 'counts': [2, 2]})
    """
    witnesses: dict[str, Any] = {}
    hit = enumerate_w2(u.alphabet).first_reducing(u)
    if hit is not None:
        move, delta = hit
        witnesses["hyp_1_1_i"] = {"move": move.to_json(), "delta": delta}
    counts = u.counts()
    present = sorted(counts)
    for i, j in zip(present, present[1:]):
        if counts[i] >= counts[j]:
            witnesses["hyp_1_1_ii"] = {"generators": [i, j], "counts": [counts[i], counts[j]]}
            break
    return HypothesisReport(
        hyp_1_1_i=hit is None,
        hyp_1_1_ii="hyp_1_1_ii" not in witnesses,
        witnesses=witnesses,
    )


@traced
def check_hyp_1_3(
    u: CyclicWord,
    /, *,
    ls: LevelSet | None = None,
    graph: DependenceGraph | None = None,
    store: LevelSetStore | None = None,
) -> HypothesisReport:
    """
    (i) :math:`|u|_{C_n}` is least over the level set; (ii) for every :math:`j` whose
    component holds no higher generator, :math:`|u|_{C_j}` is least among the members
    agreeing with ``u`` on every :math:`|\\cdot|_{C_k}`, :math:`k > j`.

    Members are the words reachable from ``u`` through length-preserving W2 moves.
    """
    ls = _level_of(u, ls, store)
    if graph is None:
        graph = graph_from_index(admissible_moves(ls))
    gens = graph.alphabet.generators
    members = ls.sorted_core()
    table = {v: syllable_decompose(v, graph).lengths for v in members}
    mine = table[u]

    def length(lengths: Mapping[int, int], i: int) -> int:
        return lengths[graph.component(i)]

    witnesses: dict[str, Any] = {}
    top = gens[-1]
    best = min(members, key=lambda v: length(table[v], top))
    if length(table[best], top) < length(mine, top):
        witnesses["hyp_1_3_i"] = {"generator": top, "member": best.to_json(), "lengths": [length(mine, top), length(table[best], top)]}

    for j in gens[:-1]:
        if any(graph.component(j) == graph.component(k) for k in gens if k > j):
            continue
        higher = [k for k in gens if k > j]
        for v in members:
            if all(length(table[v], k) == length(mine, k) for k in higher) and length(table[v], j) < length(mine, j):
                witnesses["hyp_1_3_ii"] = {"generator": j, "member": v.to_json(), "lengths": [length(mine, j), length(table[v], j)]}
                break
        if "hyp_1_3_ii" in witnesses:
            break

    report = HypothesisReport(
        hyp_1_3_i="hyp_1_3_i" not in witnesses,
        hyp_1_3_ii="hyp_1_3_ii" not in witnesses,
        witnesses=witnesses,
    )
    for key in witnesses:
        _log.warning(f"{u} fails {key}: {witnesses[key]}")
    return report


class MultiplierViolation(NamedTuple):
    move: WhiteheadW2
    generator: int


def remark_iii_violations(idx: AdmissibleMoveIndex, g: DependenceGraph, /) -> list[MultiplierViolation]:
    """
    Indexed moves :math:`(A, a)` with some :math:`x_i` one-sided in :math:`A`, where
    :math:`C_i` holds another generator, but :math:`a \\notin C_i`.
    """
    parts = g.components
    found = []
    for move in idx:
        for i in sorted({abs(x) for x in one_sided(move.A)}):
            label = g.component(i)
            if len({abs(x) for x in parts[label]}) > 1 and g.label(move.a) != label:
                found.append(MultiplierViolation(move, i))
    return found


__all__ = [
    "AdmissibleMoveIndex",
    "admissible_moves",
    "Dependence",
    "dependence",
    "depends_on",
    "DependenceGraph",
    "graph_from_index",
    "dependence_graph",
    "SyllableDecomposition",
    "syllable_decompose",
    "syllable_length",
    "syllable_sum",
    "check_hyp_1_1",
    "check_hyp_1_3",
    "MultiplierViolation",
    "remark_iii_violations",
]
