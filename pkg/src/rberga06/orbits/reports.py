#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""JSON report documents (all versioned with ``schema: 1``)."""
from __future__ import annotations
from typing_extensions import Any, Literal, Self, final
from pydantic import BaseModel, ConfigDict, Field


class Document(BaseModel):
    """A top-level JSON document."""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: Literal[1] = Field(1, alias="schema")

    def dumps(self) -> str:
        """Deterministic JSON (field order fixed by the model)."""
        return self.model_dump_json(by_alias=True, indent=2)


@final
class HypothesisReport(Document):
    """
    Which standing hypotheses hold; ``None`` means "not checked", and every
    ``False`` comes with a witness under its own key.

    >>> r = HypothesisReport(hyp_1_1_i=True).merge(HypothesisReport(hyp_1_3_i=False, witnesses={"hyp_1_3_i": 0}))
    >>> r.hyp_1_1_i, r.hyp_1_3_i, r.holds
    (True, False, False)
    """
    hyp_1_1_i: bool | None = None
    hyp_1_1_ii: bool | None = None
    hyp_1_3_i: bool | None = None
    hyp_1_3_ii: bool | None = None
    witnesses: dict[str, Any] = {}

    @property
    def holds(self) -> bool:
        """No checked hypothesis failed."""
        return all(v is not False for v in (self.hyp_1_1_i, self.hyp_1_1_ii, self.hyp_1_3_i, self.hyp_1_3_ii))

    def merge(self, other: HypothesisReport, /) -> Self:
        fields = {
            name: getattr(other, name) if getattr(other, name) is not None else getattr(self, name)
            for name in ("hyp_1_1_i", "hyp_1_1_ii", "hyp_1_3_i", "hyp_1_3_ii")
        }
        return self.model_copy(update={**fields, "witnesses": {**self.witnesses, **other.witnesses}})


@final
class CensusRecord(BaseModel):
    """Everything known about one word: level-set size, orbit counts and bound checks."""
    n: int
    u: str
    letters: list[int]
    length: int
    N: int
    N_k: list[int]
    C: int
    bound_ok: bool
    syllable_bound: int | None = None
    syllable_bound_ok: bool | None = None
    khan_bound: int | None = None
    khan_bound_ok: bool | None = None
    minimized_from: list[int] | None = None
    hypotheses: HypothesisReport = HypothesisReport()


@final
class BoundReport(Document):
    records: list[CensusRecord] = []
    findings: list[str] = []


@final
class GrowthRow(BaseModel):
    length: int
    sampled: int
    max_N: int | None
    argmax: list[int] | None


@final
class GrowthReport(Document):
    rank: int
    seed: int
    samples: int
    polynomial_degree: int
    rows: list[GrowthRow] = []

    def to_csv(self) -> str:
        lines = ["length,sampled,max_N,argmax"]
        for row in self.rows:
            argmax = " ".join(map(str, row.argmax)) if row.argmax is not None else ""
            lines.append(f"{row.length},{row.sampled},{'' if row.max_N is None else row.max_N},{argmax}")
        return "\n".join(lines) + "\n"


@final
class Failure(BaseModel):
    check: str
    detail: str
    reproduce: str


@final
class SuiteReport(Document):
    suite: str
    checked: int = 0
    failures: list[Failure] = []
    findings: list[str] = []

    @property
    def passed(self) -> bool:
        return not self.failures


@final
class VerifyReport(Document):
    suites: list[SuiteReport] = []

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)


__all__ = [
    "Document",
    "HypothesisReport",
    "CensusRecord",
    "BoundReport",
    "GrowthRow",
    "GrowthReport",
    "Failure",
    "SuiteReport",
    "VerifyReport",
]
