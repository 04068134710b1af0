"""
ThompX command line

One subcommand per pipeline: table algebra, word evaluation, the circuit
to word compilers, reversible synthesis, measurement and the property
suites. Exit status is 0 on success, 1 on a domain error and 2 on a usage
error.
"""

from typing import Optional, TextIO, Tuple

import click
from loguru import logger

from thompx import __version__
from thompx.circuits.netlist import parse_netlist
from thompx.circuits.reversible import (
    fredkin_perm,
    fredkin_repr,
    invert_reversible,
    pad_circuit,
    synthesize_sop,
    toffoli_repr,
)
from thompx.circuits.transforms import explicit_form
from thompx.circuits.truth_table import pad_permutation, parse_truth_table
from thompx.cli.measure import measure
from thompx.cli.options import (
    WORD_ORDER_HELP,
    console,
    handle_errors,
    input_option,
    jobs_option,
    note,
    output_option,
    read_word,
    resolve_jobs,
    seed_option,
    show_frame,
    word_options,
)
from thompx.codes.words import format_word, parse_word
from thompx.compiler.group_words import compile_pair, compile_wf
from thompx.compiler.lep import circuit_to_lep_word, lep_word_to_circuit
from thompx.compiler.normalize import lep_normalize
from thompx.compiler.report import CompileReport
from thompx.core.config import get_config, reload_config
from thompx.core.logging import configure_logging
from thompx.generators.words import apply_word, eval_word, word_inverse
from thompx.thompson.element import (
    ThompsonElement,
    classify,
    compose,
    invert,
    reduce,
)
from thompx.thompson.embeddings import embed0, embed1, embed_pair
from thompx.thompson.table import MorphismTable
from thompx.verification.suites import SUITE_NAMES, run_suite


def _read_element(source: TextIO) -> ThompsonElement:
    return reduce(MorphismTable.from_text(source.read()))


def _result_line(value: Optional[str]) -> str:
    return ("undefined" if value is None else format_word(value)) + "\n"


def _write_report(out: TextIO, report: CompileReport) -> None:
    out.write(report.to_text())
    note(
        f"{report.kind}: {report.word_length} tokens from size {report.source_size}, "
        f"max tau index {report.max_tau}"
    )


@click.group()
@click.version_option(__version__, prog_name="thompx")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Log level for stderr (default: LOG_LEVEL)",
)
@click.option(
    "--config",
    "profile",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="YAML configuration profile",
)
@click.option(
    "--k",
    "arity",
    type=click.IntRange(2, 10),
    default=None,
    help="Arity of tables whose header omits k (default: THOMPX_ARITY)",
)
def cli(log_level: Optional[str], profile: Optional[str], arity: Optional[int]) -> None:
    """Thompson-Higman group tables, circuit compilers and distortion measurements."""
    if profile:
        try:
            reload_config(profile=profile)
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--config") from exc
    if arity is not None:
        get_config().update({"algebra": {"default_arity": arity}})
    settings = get_config().logging
    configure_logging(log_level or settings.level, settings.file)


# ============================================================================
# TABLE ALGEBRA
# ============================================================================


@cli.command("reduce")
@input_option()
@output_option
@handle_errors
def reduce_cmd(source: TextIO, out: TextIO) -> None:
    """Canonical (maximally extended) form of a table."""
    table = MorphismTable.from_text(source.read())
    element = reduce(table)
    logger.info("Reduced {} entries to {}", len(table), len(element))
    out.write(element.to_text())


@cli.command("compose")
@input_option(
    "--in",
    "sources",
    multiple=True,
    help="Table files, repeated; the first one given acts first",
)
@output_option
@handle_errors
def compose_cmd(sources: Tuple[TextIO, ...], out: TextIO) -> None:
    """Compose tables in the order given (left to right)."""
    if len(sources) < 2:
        raise click.UsageError("compose needs at least two --in tables")
    result = _read_element(sources[0])
    for source in sources[1:]:
        result = compose(_read_element(source), result)
    out.write(result.to_text())


@cli.command("invert")
@input_option()
@output_option
@handle_errors
def invert_cmd(source: TextIO, out: TextIO) -> None:
    """Inverse of a Thompson group element."""
    out.write(invert(_read_element(source)).to_text())


@cli.command("apply")
@input_option()
@click.option("--apply", "bits", required=True, help="Input word, e.g. 011 ('eps' for empty)")
@output_option
@handle_errors
def apply_cmd(source: TextIO, bits: str, out: TextIO) -> None:
    """Apply a table to one word; prints 'undefined' outside the domain."""
    element = _read_element(source)
    out.write(_result_line(element.apply(parse_word(bits, element.table.arity))))


@cli.command("classify")
@input_option()
@output_option
@handle_errors
def classify_cmd(source: TextIO, out: TextIO) -> None:
    """Membership flags (group, lp, lep, monotone, Fix(0), Fix(1), Stab(0,1))."""
    flags = classify(_read_element(source)).as_dict()
    out.write("".join(f"{name}={str(value).lower()}\n" for name, value in flags.items()))


@cli.command("embed0")
@input_option()
@output_option
@handle_errors
def embed0_cmd(source: TextIO, out: TextIO) -> None:
    """(g)_0: g acting behind a leading 0, fixing the 1 cone."""
    out.write(embed0(_read_element(source)).to_text())


@cli.command("embed1")
@input_option()
@output_option
@handle_errors
def embed1_cmd(source: TextIO, out: TextIO) -> None:
    """(g)_1: g acting behind a leading 1, fixing the 0 cone."""
    out.write(embed1(_read_element(source)).to_text())


@cli.command("embed-pair")
@input_option("--in", "sources", multiple=True, help="Two table files: f then g")
@output_option
@handle_errors
def embed_pair_cmd(sources: Tuple[TextIO, ...], out: TextIO) -> None:
    """(f, g): f on the 0 cone and g on the 1 cone."""
    if len(sources) != 2:
        raise click.UsageError("embed-pair needs exactly two --in tables")
    f, g = (_read_element(s) for s in sources)
    out.write(embed_pair(f, g).to_text())


# ============================================================================
# WORDS
# ============================================================================


@cli.command("eval-word", help="Evaluate a generator word. " + WORD_ORDER_HELP)
@word_options
@click.option("--apply", "bits", default=None, help="Apply the word to this input instead")
@output_option
@handle_errors
def eval_word_cmd(
    word_file: Optional[TextIO], tokens: Optional[str], bits: Optional[str], out: TextIO
) -> None:
    word = read_word(word_file, tokens)
    if bits is not None:
        out.write(_result_line(apply_word(word, parse_word(bits))))
        return
    out.write(eval_word(word).to_text())


@cli.command("word-inverse", help="Inverse word of a group word. " + WORD_ORDER_HELP)
@word_options
@output_option
@handle_errors
def word_inverse_cmd(word_file: Optional[TextIO], tokens: Optional[str], out: TextIO) -> None:
    out.write(word_inverse(read_word(word_file, tokens)).to_text())


# ============================================================================
# COMPILERS
# ============================================================================


@cli.command("compile-lep", help="Circuit to a lep-basis word. " + WORD_ORDER_HELP)
@input_option(help="Netlist file")
@output_option
@handle_errors
def compile_lep_cmd(source: TextIO, out: TextIO) -> None:
    _write_report(out, circuit_to_lep_word(parse_netlist(source.read())))


@cli.command("word-to-circuit", help="Lep-basis word to a circuit. " + WORD_ORDER_HELP)
@word_options
@click.option("--inputs", type=click.IntRange(min=1), default=None, help="Input count m")
@output_option
@handle_errors
def word_to_circuit_cmd(
    word_file: Optional[TextIO], tokens: Optional[str], inputs: Optional[int], out: TextIO
) -> None:
    circuit = lep_word_to_circuit(read_word(word_file, tokens), inputs)
    out.write(circuit.to_text())


@cli.command(
    "lep-normalize", help="Rewrite a lep-valued word over the lep basis. " + WORD_ORDER_HELP
)
@word_options
@output_option
@handle_errors
def lep_normalize_cmd(word_file: Optional[TextIO], tokens: Optional[str], out: TextIO) -> None:
    _write_report(out, lep_normalize(read_word(word_file, tokens)))


@cli.command("compile-wf", help="Group word with 0x -> 0 f(x) x. " + WORD_ORDER_HELP)
@input_option(help="Netlist file")
@click.option("--debug", is_flag=True, help="Check every slice on every input")
@output_option
@handle_errors
def compile_wf_cmd(source: TextIO, debug: bool, out: TextIO) -> None:
    circuit = parse_netlist(source.read())
    _write_report(out, compile_wf(explicit_form(circuit), debug or None))


@cli.command("compile-pair", help="Group word with 0x -> 0 g(x). " + WORD_ORDER_HELP)
@input_option(help="Netlist of g (m -> m, bijective)")
@input_option(
    "--inverse",
    "inverse",
    required=False,
    default=None,
    help="Netlist of g^-1 (default: reversed gates of a reversible --in circuit)",
)
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Largest m accepted")
@output_option
@handle_errors
def compile_pair_cmd(
    source: TextIO, inverse: Optional[TextIO], cap: Optional[int], out: TextIO
) -> None:
    forward = parse_netlist(source.read())
    backward = parse_netlist(inverse.read()) if inverse else invert_reversible(forward)
    _write_report(out, compile_pair(forward, backward, cap))


# ============================================================================
# REVERSIBLE SYNTHESIS
# ============================================================================


@cli.command("toffoli")
@input_option(help="Truth table file")
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Largest m + n accepted")
@output_option
@handle_errors
def toffoli_cmd(source: TextIO, cap: Optional[int], out: TextIO) -> None:
    """Reversible circuit with x 0^n -> f(x) x over NOT, CNOT, CCNOT and SWAP."""
    circuit = toffoli_repr(parse_truth_table(source.read()), cap)
    note(f"{len(circuit.gates)} gates on {circuit.input_count} lines")
    out.write(circuit.to_text())


@cli.command("fredkin")
@input_option(help="Truth table file")
@click.option(
    "--source",
    "source_circuit",
    type=click.File("r", encoding="utf-8"),
    default=None,
    help="Circuit computing f (default: sum of products)",
)
@click.option("--perm", is_flag=True, help="Build x 1^m 0^(m+C) -> g(x) not(g(x)) x 0^C instead")
@click.option("--scratch", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Largest line count")
@output_option
@handle_errors
def fredkin_cmd(
    source: TextIO,
    source_circuit: Optional[TextIO],
    perm: bool,
    scratch: int,
    cap: Optional[int],
    out: TextIO,
) -> None:
    """Reversible circuit with x 0^(n+C) -> f(x) x 0^C."""
    table = parse_truth_table(source.read())
    if perm:
        circuit = fredkin_perm(table, scratch, cap)
    else:
        if source_circuit is not None:
            simulated = parse_netlist(source_circuit.read())
        else:
            simulated = synthesize_sop(table)
        circuit = fredkin_repr(table, simulated, cap)
    note(f"{len(circuit.gates)} gates on {circuit.input_count} lines")
    out.write(circuit.to_text())


@cli.command("pad-perm")
@input_option(help="Truth table of a permutation F")
@click.option("--width", type=click.IntRange(min=1), required=True, help="Padded bit count")
@click.option(
    "--circuit",
    type=click.File("r", encoding="utf-8"),
    default=None,
    help="Circuit for F; writes the padded circuit instead of the table",
)
@output_option
@handle_errors
def pad_perm_cmd(
    source: TextIO, width: int, circuit: Optional[TextIO], out: TextIO
) -> None:
    """Extend F on m bits to (x, w) -> (F(x), w) on --width bits."""
    table = parse_truth_table(source.read())
    padded = pad_permutation(table, width)
    if circuit is None:
        out.write(padded.to_text())
        return
    netlist = pad_circuit(parse_netlist(circuit.read()), width)
    note(f"padded circuit size {netlist.size} (3 x width = {3 * width})")
    out.write(netlist.to_text())


# ============================================================================
# VERIFICATION
# ============================================================================


@cli.command("verify")
@click.argument("suite", type=click.Choice(SUITE_NAMES + ("all",)))
@click.option("--only", multiple=True, help="Run only these properties")
@seed_option
@jobs_option
@click.option(
    "--out",
    "out",
    type=click.File("w", encoding="utf-8", lazy=True),
    default=None,
    help="Write the result table as CSV",
)
@handle_errors
def verify_cmd(
    suite: str,
    only: Tuple[str, ...],
    seed: Optional[int],
    jobs: Optional[int],
    out: Optional[TextIO],
) -> None:
    """Run a property suite; exits 1 if any property fails."""
    names = SUITE_NAMES if suite == "all" else (suite,)
    reports = [run_suite(name, seed, resolve_jobs(jobs), only or None) for name in names]
    failed = False
    for report in reports:
        frame = report.to_frame()
        show_frame(frame, f"{report.suite} (seed {report.seed})")
        for result in report.results:
            if result.message:
                console.print(f"[red]{result.name}: {result.message}[/red]")
            for failure in result.failures[:5]:
                console.print(f"[yellow]{result.name}: {failure!r}[/yellow]")
        failed = failed or not report.passed
        if out is not None:
            frame.insert(0, "suite", report.suite)
            out.write(frame.to_csv(index=False, header=report is reports[0], lineterminator="\n"))
    if failed:
        raise SystemExit(1)


cli.add_command(measure)


if __name__ == "__main__":
    cli()
