"""
CLI Plumbing

Shared option decorators, input readers and the error boundary used by
every command. Human-facing output goes to a rich console on stderr so
stdout and ``--out`` files carry only the line-based formats.
"""

import functools
from typing import Callable, List, Optional, TextIO, Tuple

import click
import pandas as pd
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from thompx.circuits.netlist import GateKind
from thompx.core.config import get_config
from thompx.core.errors import ThompxError
from thompx.generators.catalog import (
    G21_GENERATORS,
    LEP_GENERATORS,
    LP_GENERATORS,
    MONOID_GENERATORS,
    MONOTONE_GENERATORS,
    Token,
    adjacent_taus,
)
from thompx.generators.words import GeneratorWord, parse_token, parse_word

console = Console(stderr=True)

WORD_ORDER_HELP = (
    "Words are applied left to right: the first token acts first, so "
    "'a b' means b(a(x))."
)

GENERATOR_SETS = {
    "g21": G21_GENERATORS,
    "lep": LEP_GENERATORS,
    "lp": LP_GENERATORS,
    "monoid": MONOID_GENERATORS,
    "monotone": MONOTONE_GENERATORS,
}


def handle_errors(command: Callable) -> Callable:
    """Map domain errors to exit status 1 with the error name up front"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ThompxError as exc:
            console.print(
                Panel(f"{exc.code.value}: {exc.message}", title="error", border_style="red")
            )
            raise SystemExit(1)

    return wrapper


# ============================================================================
# OPTIONS
# ============================================================================


def input_option(*names: str, **kwargs) -> Callable:
    names = names or ("--in", "source")
    kwargs.setdefault("type", click.File("r", encoding="utf-8"))
    kwargs.setdefault("required", True)
    kwargs.setdefault("help", "Input file ('-' for stdin)")
    return click.option(*names, **kwargs)


def output_option(command: Callable) -> Callable:
    return click.option(
        "--out",
        "out",
        type=click.File("w", encoding="utf-8", lazy=True),
        default="-",
        show_default=True,
        help="Output file",
    )(command)


def word_options(command: Callable) -> Callable:
    """--word FILE or --tokens TEXT"""
    command = click.option(
        "--tokens", default=None, help="Inline word, e.g. \"phi_not tau(1,2)\""
    )(command)
    return click.option(
        "--word",
        "word_file",
        type=click.File("r", encoding="utf-8"),
        default=None,
        help="Word file (a compile report is accepted too)",
    )(command)


def jobs_option(command: Callable) -> Callable:
    return click.option(
        "--jobs", type=int, default=None, help="joblib workers (default: THOMPX_JOBS)"
    )(command)


def seed_option(command: Callable) -> Callable:
    return click.option(
        "--seed", type=int, default=None, help="Random seed (default: THOMPX_SEED)"
    )(command)


def resolve_jobs(jobs: Optional[int]) -> int:
    return get_config().runtime.jobs if jobs is None else jobs


# ============================================================================
# READERS
# ============================================================================


def read_word(word_file: Optional[TextIO], tokens: Optional[str]) -> GeneratorWord:
    if (word_file is None) == (tokens is None):
        raise click.UsageError("give exactly one of --word and --tokens")
    return parse_word(tokens if tokens is not None else word_file.read())


def split_list(text: str) -> List[str]:
    """Split on commas outside parentheses, so tau(1,2) stays whole"""
    parts: List[str] = []
    depth = 0
    current = ""
    for char in text:
        if char == "," and depth == 0:
            parts.append(current.strip())
            current = ""
            continue
        depth += char == "("
        depth -= char == ")"
        current += char
    parts.append(current.strip())
    return [p for p in parts if p]


def parse_generators(text: str, taus: int = 0) -> Tuple[Token, ...]:
    """
    Generator list from a comma list of names or set names

    Set names (g21, lep, lp, monoid, monotone) expand to their catalog
    sets; ``taus`` appends τ(i,i+1) for i < taus.
    """
    tokens: List[Token] = []
    for name in split_list(text):
        expanded = GENERATOR_SETS.get(name.lower())
        candidates = expanded if expanded is not None else (parse_token(name),)
        for token in candidates:
            if token is not None and token not in tokens:
                tokens.append(token)
    for token in adjacent_taus(taus):
        if token not in tokens:
            tokens.append(token)
    if not tokens:
        raise click.BadParameter("no generators given", param_hint="--gens")
    return tuple(tokens)


def parse_basis(text: Optional[str]) -> Optional[frozenset]:
    if text is None:
        return None
    try:
        return frozenset(GateKind(name.strip().upper()) for name in split_list(text))
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--basis") from exc


# ============================================================================
# DISPLAY
# ============================================================================


def show_frame(frame: pd.DataFrame, title: str) -> None:
    table = Table(title=title)
    for column in frame.columns:
        table.add_column(str(column))
    for row in frame.itertuples(index=False):
        table.add_row(*(str(value) for value in row))
    console.print(table)


def note(message: str) -> None:
    console.print(f"[dim]{message}[/dim]")
