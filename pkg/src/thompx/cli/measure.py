"""
Measurement commands

``thompx measure ...``: ball dumps (distance TAB table) and distortion
profiles (CSV n,value,resolved). Every profile is a lower bound read off
finite data; the note printed to stderr says which part is unresolved.
"""

from typing import Dict, Optional, TextIO

import click
from loguru import logger

from thompx.cli.options import (
    handle_errors,
    jobs_option,
    note,
    output_option,
    parse_basis,
    parse_generators,
    resolve_jobs,
    show_frame,
)
from thompx.generators.catalog import (
    G21_GENERATORS,
    LEP_GENERATORS,
    MONOID_GENERATORS,
    with_taus,
)
from thompx.metrics.asymmetry import (
    alpha_profile,
    asymmetry_report,
    delta_profiles,
    quadratic_audit,
)
from thompx.metrics.cayley import (
    cayley_ball,
    inverse_symmetry_violations,
    monotone_wordlength,
    wordlength_asym_profile,
)
from thompx.metrics.profiles import DistortionProfile, distortion_of, parse_dump
from thompx.metrics.schreier import schreier_ball, schreier_D
from thompx.thompson.element import ThompsonElement, reduce
from thompx.thompson.table import MorphismTable


def _radius_option(default: int):
    return click.option(
        "--radius", type=click.IntRange(min=0), default=default, show_default=True
    )


def _taus_option(default: int):
    return click.option(
        "--taus",
        type=click.IntRange(min=0),
        default=default,
        show_default=True,
        help="Add tau(i,i+1) for i < TAUS",
    )


def _frontier_option(command):
    return click.option(
        "--frontier-limit",
        type=click.IntRange(min=1),
        default=None,
        help="Node budget (default: THOMPX_FRONTIER_LIMIT)",
    )(command)


def _write_profile(out: TextIO, profile: DistortionProfile) -> None:
    out.write(profile.to_csv())
    resolved = sum(profile.resolved)
    note(f"{profile.l1} against {profile.l2}: {resolved}/{len(profile.values)} n resolved")
    if profile.note:
        note(profile.note)


@click.group("measure")
def measure() -> None:
    """Word lengths, Schreier distances and asymmetry profiles."""


@measure.command("alpha")
@click.option("--m-max", type=click.IntRange(1, 3), default=2, show_default=True)
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Largest circuit size")
@click.option("--basis", default=None, help="Gate kinds, e.g. AND,OR,NOT,FORK,SWAP")
@jobs_option
@output_option
@handle_errors
def alpha_cmd(
    m_max: int, cap: Optional[int], basis: Optional[str], jobs: Optional[int], out: TextIO
) -> None:
    """alpha(s): worst inverse size over permutations of size <= s."""
    profile = alpha_profile(m_max, cap, parse_basis(basis), resolve_jobs(jobs))
    _write_profile(out, profile)


@measure.command("cayley")
@click.option("--gens", default="g21", show_default=True, help="Comma list of generators or sets")
@_taus_option(0)
@_radius_option(3)
@click.option("--profile", is_flag=True, help="Write the lambda profile instead of the ball")
@click.option("--audit", is_flag=True, help="Check d(1, g^-1) = d(g, 1) inside the ball")
@_frontier_option
@jobs_option
@output_option
@handle_errors
def cayley_cmd(
    gens: str,
    taus: int,
    radius: int,
    profile: bool,
    audit: bool,
    frontier_limit: Optional[int],
    jobs: Optional[int],
    out: TextIO,
) -> None:
    """Directed word lengths from the identity (left multiplication)."""
    tokens = parse_generators(gens, taus)
    ball = cayley_ball(tokens, radius, frontier_limit, resolve_jobs(jobs))
    if audit:
        violations = inverse_symmetry_violations(ball, tokens)
        note(f"inverse symmetry: {len(violations)} violations")
    if profile:
        _write_profile(out, wordlength_asym_profile(ball))
        return
    out.write(ball.dump())
    note(f"{len(ball)} elements within radius {radius}{' (closed)' if ball.closed else ''}")


@measure.command("schreier")
@click.option("--gens", default="g21", show_default=True, help="Comma list; inverses are added")
@_taus_option(3)
@_radius_option(3)
@click.option(
    "--element",
    type=click.File("r", encoding="utf-8"),
    default=None,
    help="Report D(1, g) for this table instead of dumping the ball",
)
@_frontier_option
@jobs_option
@output_option
@handle_errors
def schreier_cmd(
    gens: str,
    taus: int,
    radius: int,
    element: Optional[TextIO],
    frontier_limit: Optional[int],
    jobs: Optional[int],
    out: TextIO,
) -> None:
    """Distances of Fix(0) cosets from the trivial coset."""
    ball = schreier_ball(parse_generators(gens, taus), radius, frontier_limit, resolve_jobs(jobs))
    if element is None:
        out.write(ball.dump())
        note(f"{len(ball)} cosets within radius {radius}")
        return
    distance = schreier_D(reduce(MorphismTable.from_text(element.read())), ball)
    out.write(("unresolved" if distance is None else str(distance)) + "\n")


@measure.command("delta")
@_radius_option(3)
@click.option(
    "--schreier-radius", type=click.IntRange(min=0), default=3, show_default=True
)
@_taus_option(3)
@click.option(
    "--m-max", type=click.IntRange(1, 3), default=1, show_default=True, help="alpha inputs"
)
@click.option("--small", is_flag=True, help="Write delta (monoid lengths) instead of Delta")
@_frontier_option
@jobs_option
@output_option
@handle_errors
def delta_cmd(
    radius: int,
    schreier_radius: int,
    taus: int,
    m_max: int,
    small: bool,
    frontier_limit: Optional[int],
    jobs: Optional[int],
    out: TextIO,
) -> None:
    """Schreier distance against lep-basis (Delta) or monoid (delta) word length."""
    jobs = resolve_jobs(jobs)
    ball_m = cayley_ball(with_taus(MONOID_GENERATORS, taus), radius, frontier_limit, jobs)
    ball_lep = cayley_ball(with_taus(LEP_GENERATORS, taus), radius, frontier_limit, jobs)
    schreier = schreier_ball(
        with_taus(G21_GENERATORS, taus), schreier_radius, frontier_limit, jobs
    )
    big_delta, small_delta = delta_profiles(ball_m, ball_lep, schreier)
    audit = quadratic_audit(ball_m, ball_lep)
    logger.info(
        "Quadratic audit: {} shared lep elements, {} unresolved", audit.checked, audit.unresolved
    )
    _write_profile(out, small_delta if small else big_delta)
    report = asymmetry_report(
        alpha_profile(m_max, jobs=jobs),
        big_delta=big_delta,
        small_delta=small_delta,
        audit=audit,
    )
    show_frame(report, f"measured constants (alpha over m <= {m_max})")


@measure.command("monotone")
@_radius_option(3)
@_taus_option(3)
@jobs_option
@output_option
@handle_errors
def monotone_cmd(radius: int, taus: int, jobs: Optional[int], out: TextIO) -> None:
    """Word lengths over gamma_and, gamma_or, gamma_fork and transpositions."""
    ball = monotone_wordlength(radius, taus, resolve_jobs(jobs))
    out.write(ball.dump())
    note(f"{len(ball)} monotone elements within radius {radius}")


def _lengths(source: TextIO) -> Dict[ThompsonElement, int]:
    return {element: dist for dist, element in parse_dump(source.read())}


@measure.command("distortion")
@click.option(
    "--l1",
    "l1_file",
    type=click.File("r", encoding="utf-8"),
    required=True,
    help="Ball dump of the length to maximize",
)
@click.option(
    "--l2",
    "l2_file",
    type=click.File("r", encoding="utf-8"),
    required=True,
    help="Ball dump of the bounding length",
)
@click.option("--max-n", type=click.IntRange(min=0), default=None)
@click.option("--shared", is_flag=True, help="Use elements present in both dumps only")
@output_option
@handle_errors
def distortion_cmd(
    l1_file: TextIO, l2_file: TextIO, max_n: Optional[int], shared: bool, out: TextIO
) -> None:
    """max l1(g) over g with l2(g) <= n, from two ball dumps."""
    l1, l2 = _lengths(l1_file), _lengths(l2_file)
    if shared:
        domain = [g for g in l2 if g in l1]
    else:
        domain = list(l2) + [g for g in l1 if g not in l2]
    _write_profile(out, distortion_of(l1, l2, domain, max_n, names=("l1", "l2")))
