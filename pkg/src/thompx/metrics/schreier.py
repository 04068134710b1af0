"""
Schreier Coset Graph of Fix(0)

Two group elements lie in the same left coset of Fix(0) exactly when they
agree on the cone 0·{0,1}*. A coset is therefore stored as the reduced
partial table of its restriction to that cone. Edges are left
multiplication, hF -> γhF, and the Schreier distance is

    D(1, g) = distance from the trivial coset to the coset of (g)_0
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from loguru import logger

from thompx.core.errors import ErrorCode, MetricsError
from thompx.generators.catalog import G21_GENERATORS, Token, action_of, inverse_token, with_taus
from thompx.metrics.cayley import as_tokens, breadth_first_ball, check_radius
from thompx.metrics.profiles import LengthProfile
from thompx.thompson.element import ThompsonElement, compose, identity_element, reduce
from thompx.thompson.embeddings import embed0
from thompx.thompson.table import MorphismTable, restrict_to_cone


@dataclass(frozen=True)
class SchreierCoset:
    """Canonical form of g·Fix(0): g restricted to 0·{0,1}*, reduced"""

    table: MorphismTable

    def __str__(self) -> str:
        body = ", ".join(f"{p}->{q}" for p, q in self.table.entries)
        return f"{{{body}}}"


def coset_of(element: ThompsonElement) -> SchreierCoset:
    """
    Coset form of a group element

    Example:
        >>> coset_of(identity_element()).table.mapping
        {'0': '0'}
    """
    return SchreierCoset(reduce(restrict_to_cone(element.table, "0")).table)


def coset_step(coset: SchreierCoset, token: Token) -> SchreierCoset:
    return SchreierCoset(compose(action_of(token), ThompsonElement(coset.table)).table)


def symmetric_generators(gens: Sequence[Union[Token, str]]) -> Tuple[Token, ...]:
    """
    Generators together with their inverses

    Raises:
        GeneratorError: NOT_INVERTIBLE_TOKEN for monoid-only generators
    """
    tokens = list(as_tokens(gens))
    for token in list(tokens):
        inverse = inverse_token(token)
        if inverse not in tokens:
            tokens.append(inverse)
    return tuple(tokens)


def default_schreier_generators(width: int = 4) -> Tuple[Token, ...]:
    return symmetric_generators(with_taus(G21_GENERATORS, width))


def schreier_ball(
    gens: Sequence[Union[Token, str]],
    radius: int,
    frontier_limit: Optional[int] = None,
    jobs: int = 1,
    stop_at_limit: bool = False,
) -> LengthProfile:
    """
    Distances of Fix(0) cosets from the trivial coset

    Args:
        gens: Group generators; inverses are added when missing
        radius: Search depth, at most the configured max_radius
        stop_at_limit: Keep the levels completed within frontier_limit
            instead of raising FRONTIER_LIMIT

    Raises:
        MetricsError: FRONTIER_LIMIT
        GeneratorError: NOT_INVERTIBLE_TOKEN
    """
    check_radius(radius)
    tokens = symmetric_generators(gens)
    start = coset_of(identity_element())
    ball = breadth_first_ball(
        start,
        tokens,
        radius,
        coset_step,
        frontier_limit,
        jobs,
        label="schreier",
        stop_at_limit=stop_at_limit,
    )
    logger.info("Schreier ball: {} cosets within radius {}", len(ball), ball.radius)
    return ball


def schreier_D(element: ThompsonElement, ball: LengthProfile) -> Optional[int]:
    """
    D(1, g) for a group element, or None when the coset lies outside the ball

    Raises:
        MetricsError: NOT_GROUP_ELEMENT if g is not in G_{2,1}
    """
    if not element.in_g:
        raise MetricsError(ErrorCode.NOT_GROUP_ELEMENT, "D(1, g) needs a group element")
    return ball.get(coset_of(embed0(element)))


def unresolved_elements(
    elements: Sequence[ThompsonElement], ball: LengthProfile
) -> List[ThompsonElement]:
    """Group elements whose coset of (g)_0 lies outside the ball"""
    return [g for g in elements if schreier_D(g, ball) is None]
