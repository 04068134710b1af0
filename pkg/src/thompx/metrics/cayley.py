"""
Cayley Balls

Breadth-first search of the right Cayley graph of a finitely generated
submonoid: node x has an edge to γx for every generator γ (x applied
first, then γ). Nodes are canonical elements, so two words with the same
value meet at one node.
"""

from collections import deque
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple, Union

from joblib import Parallel, delayed
from loguru import logger

from thompx.core.config import get_config
from thompx.core.errors import ErrorCode, MetricsError
from thompx.generators.catalog import MONOTONE_GENERATORS, Token, action_of, with_taus
from thompx.generators.words import parse_token
from thompx.metrics.profiles import DistortionProfile, LengthProfile, profile_from_pairs
from thompx.thompson.element import ThompsonElement, compose, identity_element, invert

Step = Callable[[Hashable, Token], Hashable]

# frontiers smaller than this are expanded in-process
_PARALLEL_FRONTIER = 256


def as_tokens(gens: Sequence[Union[Token, str]]) -> Tuple[Token, ...]:
    """Parse generator names; duplicates keep their first position"""
    tokens: List[Token] = []
    for g in gens:
        token = parse_token(g) if isinstance(g, str) else g
        if token is not None and token not in tokens:
            tokens.append(token)
    return tuple(tokens)


def left_multiply(node: ThompsonElement, token: Token) -> ThompsonElement:
    return compose(action_of(token), node)


def _expand(
    nodes: List[Hashable], gens: Tuple[Token, ...], step: Step
) -> List[List[Tuple[Hashable, Token]]]:
    return [[(step(node, g), g) for g in gens] for node in nodes]


def check_radius(radius: int) -> None:
    bound = get_config().search.max_radius
    if radius < 0 or radius > bound:
        raise MetricsError(
            ErrorCode.FRONTIER_LIMIT, f"radius {radius} outside 0..{bound} (THOMPX_MAX_RADIUS)"
        )


def breadth_first_ball(
    start: Hashable,
    gens: Tuple[Token, ...],
    radius: int,
    step: Step,
    frontier_limit: Optional[int] = None,
    jobs: int = 1,
    label: str = "ball",
    stop_at_limit: bool = False,
) -> LengthProfile:
    """
    Generic layered BFS shared by Cayley and Schreier balls

    Children are merged in frontier order and then generator order, so the
    recorded parents do not depend on ``jobs``.

    Args:
        stop_at_limit: Return the ball up to the level that crossed
            frontier_limit (marked truncated) instead of raising

    Raises:
        MetricsError: FRONTIER_LIMIT when the ball outgrows frontier_limit
    """
    limit = get_config().search.frontier_limit if frontier_limit is None else frontier_limit
    distances: Dict[Hashable, int] = {start: 0}
    parents: Dict[Hashable, Optional[Tuple[Hashable, str]]] = {start: None}
    frontier = [start]
    closed = truncated = False

    for level in range(1, radius + 1):
        if jobs != 1 and len(frontier) >= _PARALLEL_FRONTIER:
            size = -(-len(frontier) // (abs(jobs) * 4))
            chunks = [frontier[i:i + size] for i in range(0, len(frontier), size)]
            with Parallel(n_jobs=jobs) as parallel:
                parts = parallel(delayed(_expand)(chunk, gens, step) for chunk in chunks)
            expanded = [children for part in parts for children in part]
        else:
            expanded = _expand(frontier, gens, step)

        next_frontier = []
        for node, children in zip(frontier, expanded):
            for child, token in children:
                if child in distances:
                    continue
                distances[child] = level
                parents[child] = (node, str(token))
                next_frontier.append(child)
        if len(distances) > limit:
            if not stop_at_limit:
                raise MetricsError(
                    ErrorCode.FRONTIER_LIMIT,
                    f"{label} holds {len(distances)} nodes at radius {level}, limit {limit}",
                )
            logger.info(
                "{} stopped at radius {}: {} nodes exceed limit {}",
                label,
                level,
                len(distances),
                limit,
            )
            radius, truncated = level, True
            break
        logger.debug(
            "{} radius {}: {} new nodes, {} total", label, level, len(next_frontier), len(distances)
        )
        frontier = next_frontier
        if not frontier:
            closed = True
            break

    return LengthProfile(
        distances=distances,
        parents=parents,
        radius=radius,
        generators=tuple(str(g) for g in gens),
        closed=closed,
        truncated=truncated,
        label=label,
    )


def cayley_ball(
    gens: Sequence[Union[Token, str]],
    radius: int,
    frontier_limit: Optional[int] = None,
    jobs: int = 1,
) -> LengthProfile:
    """
    Directed word lengths of every element within a radius

    Args:
        gens: Generators (tokens or names such as ``"phi_not"``, ``"tau(1,2)"``)
        radius: Search depth, at most the configured max_radius
        frontier_limit: Node budget; defaults to the search config
        jobs: joblib workers for frontier expansion

    Raises:
        MetricsError: FRONTIER_LIMIT

    Example:
        >>> ball = cayley_ball(["phi_not"], 3)
        >>> sorted(ball.distances.values())
        [0, 1]
    """
    check_radius(radius)
    tokens = as_tokens(gens)
    ball = breadth_first_ball(
        identity_element(), tokens, radius, left_multiply, frontier_limit, jobs, label="cayley"
    )
    logger.info(
        "Cayley ball over {} generators: {} elements within radius {}",
        len(tokens),
        len(ball),
        radius,
    )
    return ball


def cayley_distance(
    source: ThompsonElement,
    target: ThompsonElement,
    gens: Sequence[Union[Token, str]],
    radius: int,
) -> Optional[int]:
    """Directed distance d(source, target), or None if beyond the radius"""
    tokens = as_tokens(gens)
    if source == target:
        return 0
    seen = {source}
    queue = deque([(source, 0)])
    while queue:
        node, dist = queue.popleft()
        if dist == radius:
            continue
        for token in tokens:
            child = left_multiply(node, token)
            if child == target:
                return dist + 1
            if child not in seen:
                seen.add(child)
                queue.append((child, dist + 1))
    return None


def inverse_symmetry_violations(
    ball: LengthProfile, gens: Sequence[Union[Token, str]]
) -> List[Tuple[ThompsonElement, int, int]]:
    """
    Group elements g with d(1, g^-1) != d(g, 1)

    Only elements whose inverse is in the ball are checked; d(g, 1) is
    searched up to the ball's radius.
    """
    identity = ball.start
    failures = []
    for g in ball:
        if not g.in_g:
            continue
        inverse = invert(g)
        forward = ball.get(inverse)
        if forward is None:
            continue
        backward = cayley_distance(g, identity, gens, ball.radius)
        if backward is not None and backward != forward:
            failures.append((g, forward, backward))
    return failures


def wordlength_asym_profile(ball: LengthProfile) -> DistortionProfile:
    """
    λ(n) = max{ |g^-1| : g in G, |g| <= n } on a Cayley ball

    Group elements whose inverse is outside the ball mark n = |g| and
    beyond as unresolved.
    """
    pairs = []
    unresolved = []
    for g, length in ball.items():
        if not g.in_g:
            continue
        inverse_length = ball.get(invert(g))
        if inverse_length is None:
            unresolved.append(length)
        else:
            pairs.append((length, inverse_length))
    if unresolved:
        logger.info("{} group elements have inverses outside the ball", len(unresolved))
    return profile_from_pairs(
        pairs,
        ball.radius,
        unresolved,
        l1="|g^-1|",
        l2="|g|",
        note="lower bound: group elements within the search radius only",
    )


def monotone_wordlength(radius: int, width: int = 3, jobs: int = 1) -> LengthProfile:
    """Cayley ball over gamma_and, gamma_or, gamma_fork and τ(i,i+1), i < width"""
    return cayley_ball(with_taus(MONOTONE_GENERATORS, width), radius, jobs=jobs)
