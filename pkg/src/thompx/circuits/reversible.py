"""
Reversible Synthesis

Bijective circuits over {NOT, CNOT, CCNOT, SWAP} on numbered lines
(1-based). Gate semantics: CNOT (a, b) -> (a, a xor b) and
CCNOT (a, b, c) -> (a, b, (a and b) xor c).

- toffoli_repr: x 0^n -> f(x) x
- fredkin_repr: x 0^(n+C) -> f(x) z(x), compute-copy-uncompute over a
  given circuit for f
- fredkin_perm: x 1^m 0^(m+C) -> g(x) not(g(x)) x 0^C for a permutation g
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from thompx.core.config import get_config
from thompx.core.errors import CircuitError, ErrorCode
from thompx.circuits.netlist import (
    REVERSIBLE_KINDS,
    Circuit,
    CircuitBuilder,
    GateKind,
    input_wire,
)
from thompx.circuits.truth_table import TruthTable, truth_table_of

Monomial = Tuple[int, ...]


class ReversibleBuilder:
    """
    Line-oriented circuit builder

    Each line holds the current wire name at that position; gates act on
    line numbers and replace the wires they touch.

    Args:
        width: Number of lines
        layout: Optional initial assignment; ``layout[p-1]`` is the input
            index (1-based) placed on line p
    """

    def __init__(self, width: int, layout: Optional[Sequence[int]] = None) -> None:
        self.width = width
        self._builder = CircuitBuilder(width)
        order = layout or range(1, width + 1)
        self.lines: List[str] = [input_wire(k) for k in order]
        self.ops: List[Tuple[GateKind, Tuple[int, ...]]] = []

    def _apply(self, kind: GateKind, *lines: int) -> None:
        if len(set(lines)) != len(lines):
            raise CircuitError(ErrorCode.MALFORMED_INPUT, f"{kind.value} on repeated lines {lines}")
        outputs = self._builder.add(kind, *(self.lines[p - 1] for p in lines))
        for p, wire in zip(lines, outputs):
            self.lines[p - 1] = wire
        self.ops.append((kind, lines))

    def not_(self, target: int) -> None:
        self._apply(GateKind.NOT, target)

    def cnot(self, control: int, target: int) -> None:
        self._apply(GateKind.CNOT, control, target)

    def ccnot(self, c1: int, c2: int, target: int) -> None:
        self._apply(GateKind.CCNOT, c1, c2, target)

    def swap(self, a: int, b: int) -> None:
        self._apply(GateKind.SWAP, a, b)

    def replay(self, ops: Iterable[Tuple[GateKind, Tuple[int, ...]]]) -> None:
        for kind, lines in ops:
            self._apply(kind, *lines)

    def rotate(self, order: Sequence[int]) -> None:
        """
        Rearrange lines with adjacent SWAPs

        ``order[k]`` is the line (1-based) whose content must end on line k+1.
        """
        current = list(range(1, self.width + 1))
        for target, wanted in enumerate(order):
            position = current.index(wanted)
            for k in range(position, target, -1):
                self.swap(k, k + 1)
                current[k - 1], current[k] = current[k], current[k - 1]

    def build(self, name: str = "reversible") -> Circuit:
        return self._builder.build(self.lines, name=name)


# ============================================================================
# REED-MULLER EXPANSION
# ============================================================================


def moebius_transform(vector: np.ndarray) -> np.ndarray:
    """
    GF(2) Möbius transform of a truth vector

    Index bit (m - i) of a coefficient index stands for variable x_i.
    """
    coefficients = np.asarray(vector, dtype=np.uint8).copy()
    size = coefficients.size
    step = 1
    while step < size:
        blocks = coefficients.reshape(-1, 2, step)
        blocks[:, 1, :] ^= blocks[:, 0, :]
        coefficients = blocks.reshape(-1)
        step *= 2
    return coefficients


def pprm(vector: np.ndarray, m: int) -> List[Monomial]:
    """
    Positive-polarity Reed-Muller monomials of a Boolean function

    Returns:
        Variable-index tuples (1-based), the empty tuple for the constant 1

    Example:
        >>> pprm(np.array([0, 0, 0, 1]), 2)
        [(1, 2)]
    """
    coefficients = moebius_transform(vector)
    monomials = []
    for mask in np.flatnonzero(coefficients):
        monomials.append(tuple(i for i in range(1, m + 1) if int(mask) & (1 << (m - i))))
    return sorted(monomials, key=lambda s: (len(s), s))


def mct(
    builder: ReversibleBuilder, controls: Sequence[int], target: int, free: Sequence[int] = ()
) -> None:
    """
    Multi-controlled NOT over {NOT, CNOT, CCNOT}

    Three or more controls borrow one dirty line d outside controls and
    target: with S1 the first half of the controls and S2 the rest,
    C_S1 X(d) then C_(S2+d) X(t), twice, flips t by the full conjunction and
    leaves d unchanged.

    Raises:
        CircuitError: CAP_EXCEEDED if no line can be borrowed
    """
    controls = tuple(controls)
    if len(controls) == 0:
        builder.not_(target)
    elif len(controls) == 1:
        builder.cnot(controls[0], target)
    elif len(controls) == 2:
        builder.ccnot(controls[0], controls[1], target)
    else:
        spare = [p for p in free if p not in controls and p != target]
        if not spare:
            raise CircuitError(
                ErrorCode.CAP_EXCEEDED, f"no borrowable line for a {len(controls)}-controlled NOT"
            )
        dirty = spare[0]
        half = (len(controls) + 1) // 2
        first, second = controls[:half], controls[half:] + (dirty,)
        lines = tuple(range(1, builder.width + 1))
        for _ in range(2):
            mct(builder, first, dirty, lines)
            mct(builder, second, target, lines)


# ============================================================================
# TOFFOLI REPRESENTATION
# ============================================================================


def _controlled_flip(
    builder: ReversibleBuilder,
    controls: Sequence[int],
    flip: int,
    guard: int,
    guard_value: int,
    lines: Sequence[int],
) -> None:
    # flip line `flip` when all controls are 1 and line `guard` equals guard_value
    if not guard_value:
        builder.not_(guard)
    mct(builder, tuple(controls) + (guard,), flip, lines)
    if not guard_value:
        builder.not_(guard)


def _full_monomial_cycle(
    builder: ReversibleBuilder, table: TruthTable, reduced: np.ndarray
) -> None:
    """
    Add the full monomial x1...xm to the single output line without
    ancillae, for m >= 3

    An m-controlled NOT on m+1 lines is an odd permutation while every
    available gate is even, so the input (1^m, 0) is moved by a 3-cycle on
    the (x_m, y) plane controlled by x1..x_(m-1) instead; the other two
    points of the cycle only see inputs with y = 1.
    """
    m = table.m
    x_m, y = m, m + 1
    g1 = int(reduced[-1])
    g0 = int(reduced[-2])
    p, q, r = (1, g1), (1, 1 - g1), (0, 1 - g0)

    def flip_y_when_xm_one(z):
        return (z[0], 1 - z[1]) if z[0] == 1 else z

    def flip_xm_when_y(z):
        return (1 - z[0], z[1]) if z[1] == r[1] else z

    # (p q) flips y when x_m = 1; the other transposition swaps r with
    # whichever of p, q shares its y bit
    moves = {
        "pq": (flip_y_when_xm_one, (y, x_m, 1)),
        "br": (flip_xm_when_y, (x_m, y, r[1])),
    }
    for first, second in (("pq", "br"), ("br", "pq")):
        u, v = moves[first][0], moves[second][0]

        def step(z, u=u, v=v):
            return v(u(z))

        if step(step(p)) == q and step(step(q)) == r:
            break
    else:
        raise CircuitError(ErrorCode.CAP_EXCEEDED, "no commutator realizes the 3-cycle")

    controls = tuple(range(1, m))
    half = (len(controls) + 1) // 2
    x1, x2 = controls[:half], controls[half:]
    lines = tuple(range(1, m + 2))
    for group, key in ((x1, first), (x2, second), (x1, first), (x2, second)):
        flip, guard, value = moves[key][1]
        _controlled_flip(builder, group, flip, guard, value, lines)


def toffoli_repr(table: TruthTable, cap: Optional[int] = None) -> Circuit:
    """
    Reversible circuit β_f with x 0^n -> f(x) x

    Each output bit is the XOR of its Reed-Muller monomials, added to its
    zero-initialized line by multi-controlled NOTs; SWAPs then move the
    output block in front of the input block.

    Raises:
        CircuitError: CAP_EXCEEDED if m + n exceeds the cap

    Example:
        >>> c = toffoli_repr(TruthTable(2, 1, ("0", "0", "0", "1")))
        >>> c.evaluate("110")
        '111'
    """
    cap = get_config().synthesis.toffoli_cap if cap is None else cap
    m, n = table.m, table.n
    if m + n > cap:
        raise CircuitError(ErrorCode.CAP_EXCEEDED, f"m + n = {m + n} exceeds cap {cap}")
    width = m + n
    builder = ReversibleBuilder(width)
    lines = tuple(range(1, width + 1))
    for j in range(n):
        target = m + j + 1
        vector = table.column(j)
        monomials = pprm(vector, m)
        full = tuple(range(1, m + 1))
        if n == 1 and m >= 3 and full in monomials:
            monomials.remove(full)
            reduced = vector.copy()
            reduced[-1] ^= 1
            for monomial in monomials:
                mct(builder, monomial, target, lines)
            _full_monomial_cycle(builder, table, reduced)
            continue
        for monomial in monomials:
            mct(builder, monomial, target, lines)
    builder.rotate([m + j for j in range(1, n + 1)] + list(range(1, m + 1)))
    circuit = builder.build(name="toffoli")
    logger.debug("Toffoli representation on {} lines: {} gates", width, len(circuit.gates))
    return circuit


# ============================================================================
# FREDKIN-STYLE CONSTRUCTIONS
# ============================================================================


def fredkin_repr(table: TruthTable, source: Circuit, cap: Optional[int] = None) -> Circuit:
    """
    Reversible circuit B_f with x 0^(n+C) -> f(x) x 0^C, C = circuit_size(source)

    The source circuit is simulated forward on zero-initialized scratch
    lines, its outputs are copied into the y block with CNOTs, and the
    simulation is undone.

    Raises:
        CircuitError: CAP_EXCEEDED if m + n + C exceeds the cap,
            MALFORMED_INPUT if the source circuit does not compute f
    """
    cap = get_config().synthesis.fredkin_cap if cap is None else cap
    m, n = table.m, table.n
    scratch = source.size
    width = m + n + scratch
    if width > cap:
        raise CircuitError(ErrorCode.CAP_EXCEEDED, f"{width} lines exceed cap {cap}")
    if (source.input_count, source.output_count) != (m, n) or truth_table_of(source) != table:
        raise CircuitError(ErrorCode.MALFORMED_INPUT, "source circuit does not compute the table")

    builder = ReversibleBuilder(width)
    line: Dict[str, int] = {w: i for i, w in enumerate(source.input_wires, start=1)}
    free = iter(range(m + n + 1, width + 1))
    start = len(builder.ops)

    for gate in source.gates:
        args = [line[w] for w in gate.inputs]
        kind = gate.kind
        if kind in (GateKind.FORK, GateKind.ID):
            lines = [args[0]] * len(gate.outputs)
        elif kind is GateKind.SWAP:
            lines = [args[1], args[0]]
        else:
            s = next(free)
            if args[0] == args[1] and kind in (GateKind.AND, GateKind.OR):
                builder.cnot(args[0], s)
            elif kind is GateKind.AND:
                builder.ccnot(args[0], args[1], s)
            elif kind is GateKind.OR:
                builder.not_(args[0])
                builder.not_(args[1])
                builder.ccnot(args[0], args[1], s)
                builder.not_(args[0])
                builder.not_(args[1])
                builder.not_(s)
            elif kind is GateKind.NOT:
                builder.cnot(args[0], s)
                builder.not_(s)
            elif kind in (GateKind.XOR, GateKind.CNOT):
                builder.cnot(args[0], s)
                builder.cnot(args[1], s)
            elif args[0] == args[1]:
                builder.cnot(args[0], s)
                builder.cnot(args[2], s)
            else:
                builder.ccnot(args[0], args[1], s)
                builder.cnot(args[2], s)
            if kind is GateKind.CNOT:
                lines = [args[0], s]
            elif kind is GateKind.CCNOT:
                lines = [args[0], args[1], s]
            else:
                lines = [s]
        line.update(zip(gate.outputs, lines))

    forward = list(builder.ops[start:])
    for j, wire in enumerate(source.outputs, start=1):
        builder.cnot(line[wire], m + j)
    builder.replay(reversed(forward))
    order = list(range(m + 1, m + n + 1)) + list(range(1, m + 1))
    builder.rotate(order + list(range(m + n + 1, width + 1)))
    return builder.build(name="fredkin")


def fredkin_perm(table: TruthTable, scratch: int, cap: Optional[int] = None) -> Circuit:
    """
    Reversible circuit U_g with x 1^m 0^(m+C) -> g(x) not(g(x)) x 0^C

    Raises:
        CircuitError: NOT_BIJECTIVE, CAP_EXCEEDED
    """
    cap = get_config().synthesis.fredkin_cap if cap is None else cap
    if not table.is_bijective:
        raise CircuitError(ErrorCode.NOT_BIJECTIVE, "fredkin_perm needs a permutation")
    m = table.m
    width = 3 * m + scratch
    if width > cap:
        raise CircuitError(ErrorCode.CAP_EXCEEDED, f"{width} lines exceed cap {cap}")
    builder = ReversibleBuilder(width)
    lines = tuple(range(1, width + 1))
    for j in range(m):
        for monomial in pprm(table.column(j), m):
            mct(builder, monomial, 2 * m + j + 1, lines)
    for i in range(1, m + 1):
        builder.swap(i, 2 * m + i)
    for i in range(1, m + 1):
        builder.cnot(i, m + i)
    return builder.build(name="fredkin_perm")


# ============================================================================
# INVERSION AND PADDING
# ============================================================================


def invert_reversible(circuit: Circuit) -> Circuit:
    """
    Inverse of a circuit over {NOT, CNOT, CCNOT, SWAP, ID}

    Gates are mapped to line operations (SWAP and ID only relabel), the
    output order gives the initial layout, and the line operations are
    replayed in reverse.

    Raises:
        CircuitError: NOT_BIJECTIVE if the circuit is not a reversible
            line circuit
    """
    m = circuit.input_count
    if not circuit.kinds() <= REVERSIBLE_KINDS or circuit.output_count != m:
        raise CircuitError(ErrorCode.NOT_BIJECTIVE, "not a reversible circuit")
    if any(count > 1 for count in circuit.uses().values()):
        raise CircuitError(ErrorCode.NOT_BIJECTIVE, "reversible circuits never fan out")

    line: Dict[str, int] = {w: i for i, w in enumerate(circuit.input_wires, start=1)}
    ops: List[Tuple[GateKind, Tuple[int, ...]]] = []
    for gate in circuit.gates:
        args = tuple(line[w] for w in gate.inputs)
        if gate.kind is GateKind.SWAP:
            line.update(zip(gate.outputs, (args[1], args[0])))
            continue
        if gate.kind is not GateKind.ID:
            ops.append((gate.kind, args))
        line.update(zip(gate.outputs, args))

    placement = [line[w] for w in circuit.outputs]
    if sorted(placement) != list(range(1, m + 1)):
        raise CircuitError(ErrorCode.NOT_BIJECTIVE, "outputs do not cover every line")
    layout = [0] * m
    for k, p in enumerate(placement, start=1):
        layout[p - 1] = k
    builder = ReversibleBuilder(m, layout)
    builder.replay(reversed(ops))
    return builder.build(name=f"{circuit.name}_inverse")


def pad_circuit(circuit: Circuit, width: int) -> Circuit:
    """
    Extend a circuit by pass-through inputs appended to the outputs

    Raises:
        CircuitError: BAD_SIZE if width < m
    """
    m = circuit.input_count
    if width < m:
        raise CircuitError(ErrorCode.BAD_SIZE, f"cannot pad {m} inputs down to {width}")
    extra = tuple(input_wire(i) for i in range(m + 1, width + 1))
    return Circuit(width, circuit.gates, circuit.outputs + extra, name=circuit.name)


# ============================================================================
# SUM OF PRODUCTS
# ============================================================================


def constant_zero(builder: CircuitBuilder, wire: str) -> str:
    """AND(w, NOT w)"""
    return builder.add1(GateKind.AND, wire, builder.add1(GateKind.NOT, wire))


def build_sop(builder: CircuitBuilder, wires: Sequence[str], table: TruthTable) -> List[str]:
    """
    Sum-of-products network for ``table`` over the given wires

    Wires are read with implicit fanout; negations are shared.

    Returns:
        One wire per output bit
    """
    if table.m != len(wires) or not wires:
        raise CircuitError(ErrorCode.BAD_SIZE, "SOP needs one wire per table input")
    negated: Dict[str, str] = {}

    def literal(index: int, bit: str) -> str:
        wire = wires[index]
        if bit == "1":
            return wire
        if wire not in negated:
            negated[wire] = builder.add1(GateKind.NOT, wire)
        return negated[wire]

    outputs: List[str] = []
    for j in range(table.n):
        terms: List[str] = []
        for x, y in table:
            if y[j] != "1":
                continue
            term = literal(0, x[0])
            for i in range(1, table.m):
                term = builder.add1(GateKind.AND, term, literal(i, x[i]))
            terms.append(term)
        if not terms:
            outputs.append(constant_zero(builder, wires[0]))
            continue
        total = terms[0]
        for term in terms[1:]:
            total = builder.add1(GateKind.OR, total, term)
        outputs.append(total)
    return outputs


def synthesize_sop(table: TruthTable) -> Circuit:
    """
    Sum-of-products circuit over {AND, OR, NOT}

    Raises:
        CircuitError: BAD_SIZE for m = 0 (no wire to derive constants from)
    """
    builder = CircuitBuilder(table.m)
    return builder.build(build_sop(builder, builder.inputs, table), name="sop")
