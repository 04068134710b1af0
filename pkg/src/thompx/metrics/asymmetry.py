"""
Asymmetry and Distortion Estimates

Desk-scale lower bounds for

    α(s) = max{ C(f^-1) : f a permutation of {0,1}^m, C(f) <= s }
    Δ(n) = max{ D(1, g) : g in lpG, |g|_lep <= n }
    δ(n) = max{ D(1, g) : g in lpG, |g|_M <= n }

and the constants relating them. Everything here is measured on finite
data; the true functions range over all m.
"""

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Tuple

import pandas as pd
from loguru import logger

from thompx.circuits.netlist import GateKind
from thompx.circuits.truth_table import TruthTable, truth_table_of
from thompx.core.config import get_config
from thompx.core.errors import ErrorCode, MetricsError
from thompx.metrics.profiles import DistortionProfile, LengthProfile, profile_from_pairs
from thompx.metrics.schreier import schreier_D
from thompx.metrics.search import find_min_circuit, min_circuit_size

ALPHA_MAX_INPUTS = 3


# ============================================================================
# COMPUTATIONAL ASYMMETRY
# ============================================================================


@dataclass(frozen=True)
class PermutationSizes:
    """C(f) and C(f^-1) for one permutation"""

    table: TruthTable
    size: int
    inverse_size: int


def permutation_sizes(
    m: int,
    cap: Optional[int] = None,
    basis: Optional[Iterable[GateKind]] = None,
    jobs: int = 1,
) -> List[PermutationSizes]:
    """
    Exact circuit sizes of every permutation of {0,1}^m and its inverse

    Raises:
        MetricsError: CAP_TOO_SMALL if some size exceeds the cap
    """
    cap = get_config().search.circuit_cap if cap is None else cap
    basis = None if basis is None else frozenset(basis)
    rows: List[PermutationSizes] = []
    for images in permutations(range(1 << m)):
        table = TruthTable.from_ints(m, m, images)
        size = min_circuit_size(table, basis, cap, jobs=jobs)
        inverse_size = min_circuit_size(table.inverse(), basis, cap, jobs=jobs)
        if size is None or inverse_size is None:
            raise MetricsError(
                ErrorCode.CAP_TOO_SMALL,
                f"no circuit of size <= {cap} for {table.as_ints} or its inverse",
            )
        rows.append(PermutationSizes(table, size, inverse_size))
    logger.debug("Sized {} permutations of {{0,1}}^{}", len(rows), m)
    return rows


def inverse_size_mismatches(
    m: int, cap: Optional[int] = None, basis: Optional[Iterable[GateKind]] = None
) -> List[TruthTable]:
    """
    Permutations where the two ways of sizing f^-1 disagree

    One way searches the inverted table; the other inverts the table of
    the minimal circuit found for f.
    """
    cap = get_config().search.circuit_cap if cap is None else cap
    basis = None if basis is None else frozenset(basis)
    mismatches = []
    for images in permutations(range(1 << m)):
        table = TruthTable.from_ints(m, m, images)
        circuit = find_min_circuit(table, basis, cap)
        if circuit is None:
            raise MetricsError(ErrorCode.CAP_TOO_SMALL, f"no circuit of size <= {cap}")
        direct = min_circuit_size(table.inverse(), basis, cap)
        rebuilt = min_circuit_size(truth_table_of(circuit).inverse(), basis, cap)
        if direct != rebuilt:
            mismatches.append(table)
    return mismatches


def alpha_profile(
    m_max: int,
    cap: Optional[int] = None,
    basis: Optional[Iterable[GateKind]] = None,
    jobs: int = 1,
) -> DistortionProfile:
    """
    α restricted to permutations of {0,1}^m, m <= m_max

    Tabulated for s = 0..cap; budgets below every circuit size give 0.

    Raises:
        MetricsError: BAD_SIZE unless 1 <= m_max <= 3, CAP_TOO_SMALL
    """
    if not 1 <= m_max <= ALPHA_MAX_INPUTS:
        raise MetricsError(
            ErrorCode.BAD_SIZE, f"m_max must be in 1..{ALPHA_MAX_INPUTS}, got {m_max}"
        )
    cap = get_config().search.circuit_cap if cap is None else cap
    pairs: List[Tuple[int, int]] = []
    for m in range(1, m_max + 1):
        pairs.extend((r.size, r.inverse_size) for r in permutation_sizes(m, cap, basis, jobs))
    logger.info("alpha profile over m <= {}: {} permutations", m_max, len(pairs))
    return profile_from_pairs(
        pairs,
        cap,
        l1="C(f^-1)",
        l2="C(f)",
        note=f"lower bound of alpha: permutations of {{0,1}}^m for m <= {m_max} only",
    )


# ============================================================================
# SCHREIER DISTORTION
# ============================================================================


def _schreier_profile(
    ball: LengthProfile, schreier: LengthProfile, l2: str
) -> DistortionProfile:
    pairs = []
    unresolved = []
    for g, length in ball.items():
        if g.is_empty or not g.in_g or not g.is_lp:
            continue
        distance = schreier_D(g, schreier)
        if distance is None:
            unresolved.append(length)
        else:
            pairs.append((length, distance))
    return profile_from_pairs(
        pairs,
        ball.radius,
        unresolved,
        l1="D(1,g)",
        l2=l2,
        note="lower bound: lp group elements within the word-length ball only",
    )


def delta_profiles(
    ball_m: LengthProfile, ball_lep: LengthProfile, schreier: LengthProfile
) -> Tuple[DistortionProfile, DistortionProfile]:
    """
    (Δ, δ): Schreier distance against lep-basis and monoid word length

    Elements whose coset is outside the Schreier ball are unresolved.
    """
    big_delta = _schreier_profile(ball_lep, schreier, "|g|_lep")
    small_delta = _schreier_profile(ball_m, schreier, "|g|_M")
    return big_delta, small_delta


@dataclass(frozen=True)
class QuadraticAudit:
    """
    Lep-basis length against monoid length on shared elements

    Attributes:
        constant: max |g|_lep / max(1, |g|_M)^2 over the checked elements
        checked: Elements with both lengths known
        unresolved: Lep elements of the monoid ball outside the lep ball
    """

    constant: float
    checked: int
    unresolved: int


def quadratic_audit(ball_m: LengthProfile, ball_lep: LengthProfile) -> QuadraticAudit:
    constant = 0.0
    checked = unresolved = 0
    for g, length in ball_m.items():
        if g.is_empty or not g.is_lep:
            continue
        lep_length = ball_lep.get(g)
        if lep_length is None:
            unresolved += 1
            continue
        checked += 1
        constant = max(constant, lep_length / max(1, length) ** 2)
    return QuadraticAudit(constant, checked, unresolved)


# ============================================================================
# CONSTANTS
# ============================================================================


class AsymmetryConstants:
    """
    Constants relating the measured profiles

    All values are read off lower-bound estimates, so they are reported
    and never used as pass/fail thresholds.
    """

    @staticmethod
    def alpha_lambda_gap(alpha: DistortionProfile, lam: DistortionProfile) -> int:
        """Largest pointwise |α(n) - λ(n)| where both are resolved"""
        top = min(alpha.max_n, lam.max_n)
        gaps = [
            abs(alpha(n) - lam(n))
            for n in range(top + 1)
            if alpha.resolved[n] and lam.resolved[n]
        ]
        return max(gaps, default=0)

    @staticmethod
    def sqrt_alpha_constant(
        alpha: DistortionProfile, big_delta: DistortionProfile
    ) -> Optional[float]:
        """Smallest c' with sqrt(α(n)) <= c'·Δ(n) wherever Δ(n) > 0"""
        ratios = [
            math.sqrt(alpha(n)) / big_delta(n)
            for n in range(min(alpha.max_n, big_delta.max_n) + 1)
            if big_delta(n) > 0 and big_delta.resolved[n]
        ]
        return max(ratios, default=None)

    @staticmethod
    def linear_distortion_constant(
        alpha: DistortionProfile, small_delta: DistortionProfile, c_max: int = 64
    ) -> Optional[int]:
        """Smallest integer c <= c_max with α(n) <= c·δ(c·n) for every tabulated n"""
        for c in range(1, c_max + 1):
            if all(alpha(n) <= c * small_delta(c * n) for n in range(alpha.max_n + 1)):
                return c
        return None


def asymmetry_report(
    alpha: DistortionProfile,
    lam: Optional[DistortionProfile] = None,
    big_delta: Optional[DistortionProfile] = None,
    small_delta: Optional[DistortionProfile] = None,
    audit: Optional[QuadraticAudit] = None,
) -> pd.DataFrame:
    """
    One row per measured constant

    Returns:
        DataFrame with columns quantity, value
    """
    rows: Dict[str, object] = {"alpha_max": max(alpha.values)}
    if lam is not None:
        rows["alpha_lambda_gap"] = AsymmetryConstants.alpha_lambda_gap(alpha, lam)
    if big_delta is not None:
        rows["sqrt_alpha_over_Delta"] = AsymmetryConstants.sqrt_alpha_constant(alpha, big_delta)
    if small_delta is not None:
        rows["alpha_vs_delta_c"] = AsymmetryConstants.linear_distortion_constant(
            alpha, small_delta
        )
    if audit is not None:
        rows["lep_over_monoid_squared"] = audit.constant
    return pd.DataFrame({"quantity": list(rows), "value": list(rows.values())})
