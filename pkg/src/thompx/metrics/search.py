"""
Exact Circuit Complexity

Brute-force minimum circuit size over a small gate basis. Wires are
identified with their truth vectors: an int whose bit t is the wire's
value on the t-th input word (lexicographic order). A search state is the
sorted tuple of live wire vectors, so states that differ only by wire
names or order collapse.

Each gate consumes its inputs (fanout is an explicit FORK). Level g of the
breadth-first search holds the states first reached with g gates; for
every n-element sub-multiset of a state the lowest level is recorded,
which answers the minimum size of every m -> n function at once:

    C(f) = gates + m + n
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from joblib import Parallel, delayed
from loguru import logger

from thompx.circuits.netlist import Circuit, CircuitBuilder, GateKind
from thompx.circuits.truth_table import TruthTable
from thompx.core.config import get_config
from thompx.core.errors import ErrorCode, MetricsError

State = Tuple[int, ...]
Move = Tuple[GateKind, Tuple[int, ...]]

DEFAULT_BASIS: FrozenSet[GateKind] = frozenset(
    {GateKind.AND, GateKind.OR, GateKind.NOT, GateKind.FORK, GateKind.SWAP}
)

_BINARY = {
    GateKind.AND: lambda a, b: a & b,
    GateKind.OR: lambda a, b: a | b,
    GateKind.XOR: lambda a, b: a ^ b,
}

# frontiers smaller than this are expanded in-process
_PARALLEL_FRONTIER = 2048


def input_vectors(m: int) -> Tuple[int, ...]:
    """Truth vectors of x_1..x_m; x_1 is the most significant bit of t"""
    rows = 1 << m
    return tuple(
        sum(1 << t for t in range(rows) if (t >> (m - i)) & 1) for i in range(1, m + 1)
    )


def output_vectors(table: TruthTable) -> Tuple[int, ...]:
    """Truth vector of each output column"""
    columns = table.columns
    return tuple(
        sum(1 << int(t) for t in columns[:, j].nonzero()[0]) for j in range(table.n)
    )


def successors(
    state: State, basis: FrozenSet[GateKind], mask: int, max_live: int
) -> List[Tuple[State, Move]]:
    """One-gate extensions of a state, in a fixed order"""
    moves: List[Tuple[State, Move]] = []
    for idx, a in enumerate(state):
        if idx and state[idx - 1] == a:
            continue
        rest = state[:idx] + state[idx + 1:]
        if GateKind.NOT in basis:
            moves.append((tuple(sorted(rest + (~a & mask,))), (GateKind.NOT, (a,))))
        if GateKind.FORK in basis and len(state) < max_live:
            moves.append((tuple(sorted(rest + (a, a))), (GateKind.FORK, (a,))))

    seen = set()
    for i, j in combinations(range(len(state)), 2):
        a, b = state[i], state[j]
        if a == b or (a, b) in seen:
            continue
        seen.add((a, b))
        rest = state[:i] + state[i + 1:j] + state[j + 1:]
        for kind, op in _BINARY.items():
            if kind not in basis:
                continue
            result = op(a, b)
            if result in (a, b):
                continue
            moves.append((tuple(sorted(rest + (result,))), (kind, (a, b))))
    return moves


def _move_values(kind: GateKind, operands: Tuple[int, ...], mask: int) -> Tuple[int, ...]:
    if kind is GateKind.FORK:
        return operands[0], operands[0]
    if kind is GateKind.NOT:
        return (~operands[0] & mask,)
    return (_BINARY[kind](*operands),)


def _expand_chunk(
    frontier: List[State], basis: FrozenSet[GateKind], mask: int, max_live: int
) -> List[Tuple[State, List[Tuple[State, Move]]]]:
    return [(state, successors(state, basis, mask, max_live)) for state in frontier]


@dataclass
class ReachabilityIndex:
    """
    Every m -> n function reachable within a gate budget

    Attributes:
        m, n: Input and output counts
        basis: Gate kinds the search may use
        max_gates: Gate budget (cap - m - n)
        best: Sorted output vectors -> (fewest gates, first state holding them)
        parents: State -> (previous state, gate move); None for the start
        complete: False when the frontier limit cut the search short
    """

    m: int
    n: int
    basis: FrozenSet[GateKind]
    max_gates: int
    best: Dict[State, Tuple[int, State]] = field(default_factory=dict)
    parents: Dict[State, Optional[Tuple[State, Move]]] = field(default_factory=dict)
    complete: bool = True

    def _record(self, state: State, level: int) -> None:
        for subset in set(combinations(state, self.n)):
            if subset not in self.best:
                self.best[subset] = (level, state)

    def gates_for(self, targets: Iterable[int]) -> Optional[int]:
        hit = self.best.get(tuple(sorted(targets)))
        return None if hit is None else hit[0]

    def path_to(self, state: State) -> List[Move]:
        moves: List[Move] = []
        step = self.parents[state]
        while step is not None:
            previous, move = step
            moves.append(move)
            step = self.parents[previous]
        return moves[::-1]


def build_index(
    m: int,
    n: int,
    basis: FrozenSet[GateKind],
    cap: int,
    max_live: int,
    frontier_limit: int,
    jobs: int = 1,
) -> ReachabilityIndex:
    """
    Breadth-first search over wire multisets

    Results do not depend on ``jobs``: frontier chunks are merged in order.
    """
    mask = (1 << (1 << m)) - 1
    index = ReachabilityIndex(m=m, n=n, basis=basis, max_gates=max(cap - m - n, -1))
    if index.max_gates < 0:
        return index

    start = tuple(sorted(input_vectors(m)))
    index.parents[start] = None
    index._record(start, 0)
    frontier = [start]

    for level in range(1, index.max_gates + 1):
        if jobs != 1 and len(frontier) >= _PARALLEL_FRONTIER:
            size = -(-len(frontier) // (abs(jobs) * 4))
            chunks = [frontier[i:i + size] for i in range(0, len(frontier), size)]
            with Parallel(n_jobs=jobs) as parallel:
                parts = parallel(
                    delayed(_expand_chunk)(chunk, basis, mask, max_live) for chunk in chunks
                )
            expanded = [item for part in parts for item in part]
        else:
            expanded = _expand_chunk(frontier, basis, mask, max_live)

        next_frontier: List[State] = []
        for state, moves in expanded:
            for child, move in moves:
                if child in index.parents:
                    continue
                index.parents[child] = (state, move)
                index._record(child, level)
                next_frontier.append(child)
        logger.debug(
            "Circuit search m={} n={}: level {} adds {} states ({} total)",
            m,
            n,
            level,
            len(next_frontier),
            len(index.parents),
        )
        frontier = next_frontier
        if not frontier:
            break
        if len(index.parents) > frontier_limit:
            logger.warning(
                "Circuit search stopped at level {}: {} states exceed the frontier limit",
                level,
                len(index.parents),
            )
            index.complete = False
            break
    return index


_INDEXES: Dict[Tuple, ReachabilityIndex] = {}


def clear_index_cache() -> None:
    _INDEXES.clear()


def reachability_index(
    m: int,
    n: int,
    basis: Optional[Iterable[GateKind]] = None,
    cap: Optional[int] = None,
    max_live: Optional[int] = None,
    jobs: int = 1,
) -> ReachabilityIndex:
    """
    Search index shared by every query with the same (m, n, basis, cap)

    Raises:
        MetricsError: BAD_SIZE unless m, n >= 1
    """
    if m < 1 or n < 1:
        raise MetricsError(ErrorCode.BAD_SIZE, f"need m, n >= 1, got m={m} n={n}")
    settings = get_config().search
    key = (
        m,
        n,
        frozenset(DEFAULT_BASIS if basis is None else basis),
        settings.circuit_cap if cap is None else cap,
        max(settings.max_live_wires if max_live is None else max_live, m),
        settings.frontier_limit,
    )
    if key not in _INDEXES:
        _INDEXES[key] = build_index(*key, jobs=jobs)
    return _INDEXES[key]


def min_circuit_size(
    table: TruthTable,
    basis: Optional[Iterable[GateKind]] = None,
    cap: Optional[int] = None,
    max_live: Optional[int] = None,
    jobs: int = 1,
) -> Optional[int]:
    """
    Smallest size (gates plus ports) of a circuit computing the table

    Args:
        table: Function {0,1}^m -> {0,1}^n with m, n >= 1
        basis: Gate kinds; defaults to AND, OR, NOT, FORK, SWAP
        cap: Largest size to search
        max_live: Bound on simultaneously live wires

    Returns:
        The minimum size, or None if no circuit of size <= cap was found

    Example:
        >>> min_circuit_size(TruthTable(1, 1, ("1", "0")))
        3
    """
    index = reachability_index(table.m, table.n, basis, cap, max_live, jobs)
    gates = index.gates_for(output_vectors(table))
    return None if gates is None else gates + table.m + table.n


def find_min_circuit(
    table: TruthTable,
    basis: Optional[Iterable[GateKind]] = None,
    cap: Optional[int] = None,
    max_live: Optional[int] = None,
    jobs: int = 1,
) -> Optional[Circuit]:
    """A circuit of size min_circuit_size(table), rebuilt from the search tree"""
    index = reachability_index(table.m, table.n, basis, cap, max_live, jobs)
    targets = output_vectors(table)
    hit = index.best.get(tuple(sorted(targets)))
    if hit is None:
        return None

    mask = (1 << (1 << table.m)) - 1
    builder = CircuitBuilder(table.m)
    live: List[Tuple[int, str]] = list(zip(input_vectors(table.m), builder.inputs))

    def take(value: int) -> str:
        position = next(p for p, (v, _) in enumerate(live) if v == value)
        return live.pop(position)[1]

    for kind, operands in index.path_to(hit[1]):
        wires = [take(v) for v in operands]
        outputs = builder.add(kind, *wires)
        live.extend(zip(_move_values(kind, operands, mask), outputs))

    return builder.build([take(v) for v in targets], name="minimal")
