#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The ``wh`` command line."""
from __future__ import annotations
from dataclasses import dataclass
import json
import logging
from pathlib import Path
from typing_extensions import Any, final, override
import click
from pydantic import ValidationError
from .__about__ import __version__
from .config import CACHE_DIR_ENV, ExperimentConfig
from .dependence import dependence_graph
from .errors import WhiteheadError
from .experiments import census_many, growth
from .logs import configure
from .markers import build_marked_sequence, factor_by_low_letters
from .orbits import minimize
from .store import LevelSetStore
from .verify import Suite, run
from .words import parse_word


_log = logging.getLogger(__name__)


@final
@dataclass(slots=True)
class State:
    """Options shared by every command."""
    cache_dir: Path | None = None
    override_rank_guard: bool = False

    def store(self, cache_dir: Path | None = None, /) -> LevelSetStore | None:
        root = cache_dir or self.cache_dir
        return None if root is None else LevelSetStore(root)


class _Group(click.Group):
    """Maps library errors onto exit codes (2: bad input, 1: contradiction)."""

    @override
    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except WhiteheadError as err:
            click.echo(f"Error: {err}", err=True)
            ctx.exit(err.exit_code)
        except ValidationError as err:
            click.echo(f"Error: invalid configuration\n{err}", err=True)
            ctx.exit(2)


def _lengths(ctx: click.Context, param: click.Parameter, value: str) -> range:
    """``A..B`` (inclusive), or a single length."""
    try:
        if ".." in value:
            lo, hi = value.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(value), int(value) + 1)
    except ValueError:
        raise click.BadParameter(f"expected LENGTH or MIN..MAX, got {value!r}") from None


def _word(positional: str | None, option: str | None, /) -> str:
    """WORD, given either positionally or as ``--word``."""
    if positional is not None and option is not None and positional != option:
        raise click.UsageError(f"two different words given: {positional!r} and --word {option!r}")
    word = positional if positional is not None else option
    if word is None:
        raise click.UsageError("missing WORD (positional or --word)")
    return word


@click.group(cls=_Group)
@click.version_option(__version__, prog_name="wh")
@click.option("-v", "--verbose", count=True, help="Log more (-v: info, -vv: debug).")
@click.option(
    "--cache-dir", type=click.Path(file_okay=False, path_type=Path), envvar=CACHE_DIR_ENV,
    default=None, help=f"Level-set cache directory [env: {CACHE_DIR_ENV}].",
)
@click.option("--override-rank-guard", is_flag=True, help="Allow exhaustive enumeration above rank 6.")
@click.pass_context
def main(ctx: click.Context, verbose: int, cache_dir: Path | None, override_rank_guard: bool) -> None:
    """Whitehead orbits of cyclic words in free groups."""
    configure(verbose)
    ctx.obj = State(cache_dir, override_rank_guard)


@main.command("minimize")
@click.argument("word", required=False)
@click.option("--word", "word_opt", help="The word, instead of the WORD argument.")
@click.option("--rank", type=int, required=True, help="Rank n of the free group.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
@click.pass_obj
def cmd_minimize(state: State, word: str | None, word_opt: str | None, rank: int, as_json: bool) -> None:
    """Shorten WORD by Whitehead moves until no move reduces it."""
    word = _word(word, word_opt)
    w = parse_word(word, rank)
    if not w:
        _log.warning(f"{word!r} reduces to the empty word")
    v, chain = minimize(w, override=state.override_rank_guard)
    if as_json:
        click.echo(json.dumps({"schema": 1, "word": v.to_json(), "text": v.text, "minimal": not chain.steps, "chain": chain.to_json()}, indent=2))
        return
    click.echo(v.text or "(empty)")
    click.echo("minimal" if not chain.steps else f"chain: {chain}")


@main.command("census")
@click.option("--word", "words", multiple=True, help="A word to census (repeatable).")
@click.option("--rank", type=int, help="Rank n of the free group.")
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False, path_type=Path), help="YAML experiment file.")
@click.option("--auto-minimize", is_flag=True, help="Minimize words first instead of rejecting them.")
@click.option("--max-degree", type=int, default=None, help="Degree cap of the ascending-chain check.")
@click.option("--json", "as_json", is_flag=True, help="Emit the full JSON report.")
@click.pass_obj
def cmd_census(
    state: State, words: tuple[str, ...], rank: int | None, config_file: Path | None,
    auto_minimize: bool, max_degree: int | None, as_json: bool,
) -> None:
    """N(u), the N_k(u) and the bound checks of every given word."""
    if config_file is not None:
        config = ExperimentConfig.read(config_file)
    elif rank is None:
        raise click.UsageError("either --rank or --config is required")
    else:
        config = ExperimentConfig(
            rank=rank, words=list(words), max_degree=max_degree,
            auto_minimize=auto_minimize, override_rank_guard=state.override_rank_guard,
        )
    report = census_many(config, store=state.store(config.cache_dir))
    if config.output is not None:
        config.output.write_text(report.dumps(), "utf-8")
    if as_json:
        click.echo(report.dumps())
        return
    for r in report.records:
        khan = "" if r.khan_bound_ok is None else f" khan={'ok' if r.khan_bound_ok else 'FAIL'}"
        click.echo(
            f"{r.u}: |u|={r.length} N={r.N} N_k={r.N_k} C={r.C} "
            f"product={'ok' if r.bound_ok else 'FAIL'}{khan} hypotheses={'ok' if r.hypotheses.holds else 'FAIL'}"
        )
    for note in report.findings:
        click.echo(f"finding: {note}")


@main.command("growth")
@click.option("--rank", type=int, required=True, help="Rank n of the free group.")
@click.option("--lengths", callback=_lengths, required=True, help="Lengths to sample, as MIN..MAX.")
@click.option("--samples", type=int, default=20, show_default=True, help="Words sampled per length.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--csv", "fmt", flag_value="csv", default=True, help="Emit CSV (default).")
@click.option("--json", "fmt", flag_value="json", help="Emit JSON.")
@click.pass_obj
def cmd_growth(state: State, rank: int, lengths: range, samples: int, seed: int, fmt: str) -> None:
    """Largest sampled N(u) per length, over words satisfying the occurrence hypothesis."""
    report = growth(rank, lengths, samples, seed, store=state.store())
    click.echo(report.dumps() if fmt == "json" else report.to_csv(), nl=fmt == "json")


@main.command("verify")
@click.argument("suite", type=click.Choice([*map(str, Suite), "all"]))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the full JSON report.")
@click.pass_context
def cmd_verify(ctx: click.Context, suite: str, seed: int, as_json: bool) -> None:
    """Run a verification suite; exits 1 on any failure."""
    report = run([suite], seed=seed)
    if as_json:
        click.echo(report.dumps())
    else:
        for s in report.suites:
            click.echo(f"{s.suite}: {'passed' if s.passed else 'FAILED'} ({s.checked} checks, {len(s.failures)} failures)")
            for failure in s.failures:
                click.echo(f"  {failure.detail}\n    reproduce: {failure.reproduce}")
            for note in s.findings:
                click.echo(f"  finding: {note}")
    if not report.passed:
        ctx.exit(1)


@main.command("depgraph")
@click.argument("word", required=False)
@click.option("--word", "word_opt", help="The word, instead of the WORD argument.")
@click.option("--rank", type=int, required=True, help="Rank n of the free group.")
@click.option("--dot", "fmt", flag_value="dot", help="Emit Graphviz DOT.")
@click.option("--json", "fmt", flag_value="json", help="Emit JSON.")
@click.pass_obj
def cmd_depgraph(state: State, word: str | None, word_opt: str | None, rank: int, fmt: str | None) -> None:
    """The dependence graph of a minimal WORD, and its components."""
    g = dependence_graph(parse_word(_word(word, word_opt), rank), store=state.store())
    if fmt == "dot":
        click.echo(g.to_dot())
    elif fmt == "json":
        click.echo(g.dumps())
    click.echo(f"{len(g.components)} components: {g}", err=fmt is not None)


@main.command("lift")
@click.argument("word", required=False)
@click.option("--word", "word_opt", help="The word, instead of the WORD argument.")
@click.option("--rank", type=int, required=True, help="Rank n of the free group.")
@click.option("-k", "k", type=int, default=1, show_default=True, help="Cut index.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def cmd_lift(word: str | None, word_opt: str | None, rank: int, k: int, as_json: bool) -> None:
    """The marker sequence V_u of WORD."""
    u = parse_word(_word(word, word_opt), rank)
    V = build_marked_sequence(u, k)
    if as_json:
        click.echo(json.dumps({"schema": 1, **V.to_json(), "rules": list(V.rules)}, indent=2))
        return
    click.echo(f"factors: {factor_by_low_letters(u, k)}")
    for v, rule in zip(V.words, V.rules):
        click.echo(f"{v.text}\t{rule}")
    click.echo(f"total length {V.total_length}")


__all__ = ["State", "main"]
