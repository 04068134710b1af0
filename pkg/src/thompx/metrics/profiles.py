"""
Length and Distortion Profiles

A LengthProfile is a finished breadth-first ball: the distance of every
reached element from the start, the parent edge that first reached it and
the radius that was exhausted. A DistortionProfile tabulates

    δ(n) = max{ l1(g) : g in domain, l2(g) <= n }

for n = 0..N, with a flag per n telling whether every element that could
contribute was resolved. Maxima over an empty set are 0.

Ball dumps hold one element per line, ``distance<TAB>table``, with the
table written on one line as ``key->image`` pairs.
"""

from dataclasses import dataclass, field
from typing import (
    Dict,
    Hashable,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import networkx as nx
import pandas as pd

from thompx.codes.words import format_word, parse_word
from thompx.core.errors import ErrorCode, MetricsError
from thompx.thompson.element import ThompsonElement, reduce
from thompx.thompson.table import MorphismTable

EMPTY_TABLE_TEXT = "empty"

Lengths = Union["LengthProfile", Mapping[Hashable, int]]


# ============================================================================
# ONE-LINE TABLES
# ============================================================================


def table_line(table: MorphismTable) -> str:
    """
    Single-line form of a table

    Example:
        >>> table_line(MorphismTable.of({"0": "1", "1": "0"}))
        '0->1 1->0'
    """
    if not table.entries:
        return EMPTY_TABLE_TEXT
    return " ".join(f"{format_word(p)}->{format_word(q)}" for p, q in table.entries)


def parse_table_line(text: str, k: int = 2) -> MorphismTable:
    """
    Inverse of table_line

    Raises:
        MetricsError: MALFORMED_INPUT on an entry without '->'
    """
    text = text.strip()
    if text == EMPTY_TABLE_TEXT:
        return MorphismTable((), k)
    mapping: Dict[str, str] = {}
    for part in text.split():
        if "->" not in part:
            raise MetricsError(ErrorCode.MALFORMED_INPUT, f"bad table entry {part!r}")
        left, right = part.split("->", 1)
        mapping[parse_word(left, k)] = parse_word(right, k)
    return MorphismTable.of(mapping, k)


# ============================================================================
# LENGTH PROFILE
# ============================================================================


@dataclass
class LengthProfile:
    """
    Distances from a start node, as found by breadth-first search

    Nodes are canonical elements (or Schreier cosets); anything with a
    ``table`` attribute can be dumped.

    Attributes:
        distances: Node -> distance, in discovery order
        parents: Node -> (parent node, generator name); None for the start
        radius: Search bound that was exhausted
        generators: Names of the generators used for the edges
        closed: True when the ball stopped growing before the radius
        truncated: True when the node budget ended the search; radius is
            then the last level that was completed
    """

    distances: Dict[Hashable, int]
    parents: Dict[Hashable, Optional[Tuple[Hashable, str]]]
    radius: int
    generators: Tuple[str, ...]
    closed: bool = False
    truncated: bool = False
    label: str = "ball"

    def __len__(self) -> int:
        return len(self.distances)

    def __contains__(self, node: object) -> bool:
        return node in self.distances

    def __getitem__(self, node: Hashable) -> int:
        return self.distances[node]

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.distances)

    def get(self, node: Hashable) -> Optional[int]:
        return self.distances.get(node)

    def items(self):
        return self.distances.items()

    @property
    def start(self) -> Hashable:
        return next(iter(self.distances))

    def sphere_sizes(self) -> List[int]:
        """Number of nodes at each distance 0..radius"""
        sizes = [0] * (self.radius + 1)
        for dist in self.distances.values():
            sizes[dist] += 1
        return sizes

    def path_to(self, node: Hashable) -> List[str]:
        """Generator names along the recorded parent edges, start first"""
        names: List[str] = []
        step = self.parents[node]
        while step is not None:
            parent, name = step
            names.append(name)
            step = self.parents[parent]
        return names[::-1]

    def to_graph(self) -> nx.DiGraph:
        """
        Parent edges as a directed graph

        Nodes carry a ``distance`` attribute and edges the ``generator``
        that labels them.
        """
        graph = nx.DiGraph(name=self.label)
        for node, dist in self.distances.items():
            graph.add_node(node, distance=dist)
        for node, step in self.parents.items():
            if step is not None:
                parent, name = step
                graph.add_edge(parent, node, generator=name)
        return graph

    def dump(self) -> str:
        lines = [f"{dist}\t{table_line(node.table)}" for node, dist in self.distances.items()]
        return "\n".join(lines) + "\n"


def parse_dump(text: str, k: int = 2) -> List[Tuple[int, ThompsonElement]]:
    """
    Read a ball dump back as (distance, canonical element) pairs

    Raises:
        MetricsError: MALFORMED_INPUT on a line without a tab
    """
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" not in line:
            raise MetricsError(ErrorCode.MALFORMED_INPUT, f"bad dump line {line!r}")
        dist, body = line.split("\t", 1)
        rows.append((int(dist), reduce(parse_table_line(body, k))))
    return rows


# ============================================================================
# DISTORTION PROFILE
# ============================================================================


@dataclass(frozen=True)
class DistortionProfile:
    """
    Tabulated distortion function n -> value, n = 0..N

    Calling the profile with n > N returns the value at N.

    Attributes:
        values: value at each n
        resolved: False where an unresolved element might raise the value
        l1, l2: Names of the measured and the bounding length functions
        note: Caveat printed with the profile
    """

    values: Tuple[int, ...]
    resolved: Tuple[bool, ...]
    l1: str = "l1"
    l2: str = "l2"
    note: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if len(self.values) != len(self.resolved) or not self.values:
            raise MetricsError(
                ErrorCode.MALFORMED_INPUT, "profile needs one resolved flag per value"
            )

    def __call__(self, n: int) -> int:
        return self.values[min(max(n, 0), len(self.values) - 1)]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    @property
    def is_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    @property
    def fully_resolved(self) -> bool:
        return all(self.resolved)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "n": range(len(self.values)),
                "value": list(self.values),
                "resolved": list(self.resolved),
            }
        )

    def to_csv(self) -> str:
        frame = self.to_frame()
        frame["resolved"] = frame["resolved"].map({True: "true", False: "false"})
        return frame.to_csv(index=False, lineterminator="\n")


def profile_from_pairs(
    pairs: Iterable[Tuple[int, int]],
    max_n: int,
    unresolved: Iterable[int] = (),
    l1: str = "l1",
    l2: str = "l2",
    note: str = "",
) -> DistortionProfile:
    """
    Build δ from (l2, l1) measurements

    Args:
        pairs: (bounding length, measured length) for each resolved element
        max_n: Last n to tabulate
        unresolved: Bounding lengths of elements whose measured length is unknown
    """
    best = [0] * (max_n + 1)
    for bound, value in pairs:
        if bound <= max_n:
            best[bound] = max(best[bound], value)
    first_gap = min((b for b in unresolved if b <= max_n), default=max_n + 1)

    values: List[int] = []
    running = 0
    for n in range(max_n + 1):
        running = max(running, best[n])
        values.append(running)
    resolved = tuple(n < first_gap for n in range(max_n + 1))
    return DistortionProfile(tuple(values), resolved, l1=l1, l2=l2, note=note)


def distortion_of(
    l1: Lengths,
    l2: Lengths,
    domain: Iterable[Hashable],
    max_n: Optional[int] = None,
    names: Sequence[str] = ("l1", "l2"),
) -> DistortionProfile:
    """
    δ[l1, l2] on a shared domain

    Args:
        l1: Length function to maximize
        l2: Length function bounding the sublevel sets
        domain: Elements to range over
        max_n: Last n to tabulate; defaults to the largest l2 value

    Raises:
        MetricsError: DOMAIN_NOT_COVERED if an element lacks either length
    """
    pairs = []
    for element in domain:
        if element not in l1 or element not in l2:
            raise MetricsError(
                ErrorCode.DOMAIN_NOT_COVERED, f"{element!r} is missing from a length function"
            )
        pairs.append((l2[element], l1[element]))
    if max_n is None:
        max_n = max((b for b, _ in pairs), default=0)
    return profile_from_pairs(pairs, max_n, l1=names[0], l2=names[1])
