"""
Hypothesis strategies for words, prefix codes, tables and circuits.
"""

from typing import List

from hypothesis import strategies as st

from thompx.circuits.netlist import Circuit, CircuitBuilder, GateKind
from thompx.codes.prefix_codes import PrefixCode
from thompx.thompson.element import ThompsonElement, reduce
from thompx.thompson.table import MorphismTable


def words(max_length: int = 6) -> st.SearchStrategy:
    return st.text(alphabet="01", min_size=0, max_size=max_length)


@st.composite
def maximal_codes(draw, max_length: int = 4, max_splits: int = 6) -> PrefixCode:
    """Maximal binary prefix code built by splitting leaves of {eps}"""
    leaves: List[str] = [""]
    for _ in range(draw(st.integers(0, max_splits))):
        candidates = sorted(w for w in leaves if len(w) < max_length)
        if not candidates:
            break
        leaf = draw(st.sampled_from(candidates))
        leaves.remove(leaf)
        leaves.extend([leaf + "0", leaf + "1"])
    return PrefixCode.of(leaves)


@st.composite
def prefix_codes(draw, max_size: int = 6, max_length: int = 5) -> PrefixCode:
    members: List[str] = []
    for word in draw(st.lists(words(max_length), max_size=max_size)):
        if any(w.startswith(word) or word.startswith(w) for w in members):
            continue
        members.append(word)
    return PrefixCode.of(members)


@st.composite
def tables(draw, max_length: int = 4, max_splits: int = 5) -> MorphismTable:
    """Total table on a maximal code with arbitrary images"""
    code = draw(maximal_codes(max_length, max_splits))
    return MorphismTable.of({p: draw(words(max_length)) for p in code})


@st.composite
def group_elements(draw, max_length: int = 3, max_splits: int = 4) -> ThompsonElement:
    """Bijection between two maximal codes with the same number of leaves"""
    domain = draw(maximal_codes(max_length, max_splits))
    splits = len(domain) - 1
    leaves: List[str] = [""]
    for _ in range(splits):
        leaf = draw(st.sampled_from(sorted(leaves)))
        leaves.remove(leaf)
        leaves.extend([leaf + "0", leaf + "1"])
    images = draw(st.permutations(sorted(leaves)))
    return reduce(dict(zip(domain.words, images)))


@st.composite
def logic_circuits(draw, max_inputs: int = 4, max_gates: int = 8) -> Circuit:
    """Desugared circuits over AND, OR, NOT and FORK"""
    m = draw(st.integers(1, max_inputs))
    builder = CircuitBuilder(m)
    wires = list(builder.inputs)
    for _ in range(draw(st.integers(0, max_gates))):
        kind = draw(st.sampled_from([GateKind.AND, GateKind.OR, GateKind.NOT, GateKind.FORK]))
        if kind in (GateKind.AND, GateKind.OR) and len(wires) >= 2:
            a, b = draw(st.lists(st.sampled_from(wires), min_size=2, max_size=2, unique=True))
            wires.extend(builder.add(kind, a, b))
        else:
            wires.extend(builder.add(
                GateKind.NOT if kind is not GateKind.FORK else kind, draw(st.sampled_from(wires))
            ))
    n = draw(st.integers(1, min(len(wires), 3)))
    outputs = draw(st.lists(st.sampled_from(wires), min_size=n, max_size=n, unique=True))
    return builder.build(outputs)
