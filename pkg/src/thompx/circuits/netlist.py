"""
Circuit IR

Combinational circuits as an acyclic gate list over named wires. The input
ports are ``in1 .. in<m>``; every gate defines fresh wires ``w<id>``. Wires
may feed several gates (implicit fanout) and may be left dangling;
``normalize_fanout`` makes both explicit.

Netlist text format::

    circuit inputs=2 outputs=1
    w1 = AND in1 in2
    outputs w1
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from thompx.codes.words import Word
from thompx.core.errors import CircuitError, ErrorCode


class GateKind(str, Enum):
    """Gate types"""

    AND = "AND"
    OR = "OR"
    NOT = "NOT"
    XOR = "XOR"
    FORK = "FORK"
    ID = "ID"
    SWAP = "SWAP"
    CNOT = "CNOT"
    CCNOT = "CCNOT"


# (inputs, outputs) per kind
ARITY: Dict[GateKind, Tuple[int, int]] = {
    GateKind.AND: (2, 1),
    GateKind.OR: (2, 1),
    GateKind.XOR: (2, 1),
    GateKind.NOT: (1, 1),
    GateKind.ID: (1, 1),
    GateKind.FORK: (1, 2),
    GateKind.SWAP: (2, 2),
    GateKind.CNOT: (2, 2),
    GateKind.CCNOT: (3, 3),
}

SUGAR_KINDS = frozenset({GateKind.XOR, GateKind.CNOT, GateKind.CCNOT})
REVERSIBLE_KINDS = frozenset(
    {GateKind.NOT, GateKind.CNOT, GateKind.CCNOT, GateKind.SWAP, GateKind.ID}
)
LOGIC_KINDS = frozenset({GateKind.AND, GateKind.OR, GateKind.NOT, GateKind.FORK, GateKind.ID})


def gate_function(kind: GateKind, bits: Sequence[int]) -> Tuple[int, ...]:
    """Bit semantics of one gate"""
    if kind is GateKind.AND:
        return (bits[0] & bits[1],)
    if kind is GateKind.OR:
        return (bits[0] | bits[1],)
    if kind is GateKind.XOR:
        return (bits[0] ^ bits[1],)
    if kind is GateKind.NOT:
        return (1 - bits[0],)
    if kind is GateKind.ID:
        return (bits[0],)
    if kind is GateKind.FORK:
        return (bits[0], bits[0])
    if kind is GateKind.SWAP:
        return (bits[1], bits[0])
    if kind is GateKind.CNOT:
        return (bits[0], bits[0] ^ bits[1])
    return (bits[0], bits[1], (bits[0] & bits[1]) ^ bits[2])


def input_wire(i: int) -> str:
    """Name of the i-th input port (1-based)"""
    return f"in{i}"


@dataclass(frozen=True)
class Gate:
    """One gate: kind, ordered input wires, ordered fresh output wires"""

    kind: GateKind
    inputs: Tuple[str, ...]
    outputs: Tuple[str, ...]

    def __post_init__(self) -> None:
        expected = ARITY[self.kind]
        if (len(self.inputs), len(self.outputs)) != expected:
            raise CircuitError(
                ErrorCode.MALFORMED_INPUT,
                f"{self.kind.value} takes {expected[0]} inputs and {expected[1]} outputs, "
                f"got {len(self.inputs)} and {len(self.outputs)}",
            )

    def __str__(self) -> str:
        return f"{','.join(self.outputs)} = {self.kind.value} {' '.join(self.inputs)}"


@dataclass(frozen=True)
class Circuit:
    """
    Immutable combinational circuit

    Gates are stored in a topological order: every gate input is an input
    port or an output of an earlier gate.

    Attributes:
        input_count: Number of input ports m
        gates: Gate list in evaluation order
        outputs: Ordered output wire references (length n)
    """

    input_count: int
    gates: Tuple[Gate, ...] = ()
    outputs: Tuple[str, ...] = ()
    name: str = field(default="circuit", compare=False)

    def __post_init__(self) -> None:
        if self.input_count < 0:
            raise CircuitError(ErrorCode.MALFORMED_INPUT, "negative input count")
        defined = set(self.input_wires)
        for index, gate in enumerate(self.gates):
            for wire in gate.inputs:
                if wire not in defined:
                    raise CircuitError(
                        ErrorCode.MALFORMED_INPUT,
                        f"gate {index} ({gate.kind.value}) reads undefined wire '{wire}'",
                    )
            for wire in gate.outputs:
                if wire in defined:
                    raise CircuitError(
                        ErrorCode.MALFORMED_INPUT, f"wire '{wire}' defined twice"
                    )
                defined.add(wire)
        for wire in self.outputs:
            if wire not in defined:
                raise CircuitError(ErrorCode.MALFORMED_INPUT, f"output '{wire}' does not resolve")

    @property
    def output_count(self) -> int:
        return len(self.outputs)

    @property
    def input_wires(self) -> Tuple[str, ...]:
        return tuple(input_wire(i) for i in range(1, self.input_count + 1))

    @cached_property
    def wires(self) -> Tuple[str, ...]:
        """All wires in definition order"""
        defined = list(self.input_wires)
        for gate in self.gates:
            defined.extend(gate.outputs)
        return tuple(defined)

    @cached_property
    def producers(self) -> Dict[str, int]:
        """Wire -> index of the gate defining it (inputs map to -1)"""
        result = {wire: -1 for wire in self.input_wires}
        for index, gate in enumerate(self.gates):
            for wire in gate.outputs:
                result[wire] = index
        return result

    def uses(self) -> Dict[str, int]:
        """How often each wire is read, output ports included"""
        counts = {wire: 0 for wire in self.wires}
        for gate in self.gates:
            for wire in gate.inputs:
                counts[wire] += 1
        for wire in self.outputs:
            counts[wire] += 1
        return counts

    def kinds(self) -> frozenset:
        return frozenset(gate.kind for gate in self.gates)

    @property
    def size(self) -> int:
        """Gates plus input ports plus output ports"""
        return len(self.gates) + self.input_count + self.output_count

    def evaluate(self, x: Word) -> Word:
        """
        Evaluate on one input word

        Raises:
            CircuitError: LENGTH_MISMATCH if |x| != m
        """
        if len(x) != self.input_count:
            raise CircuitError(
                ErrorCode.LENGTH_MISMATCH,
                f"circuit has {self.input_count} inputs, got a word of length {len(x)}",
            )
        values: Dict[str, int] = {
            input_wire(i + 1): int(bit) for i, bit in enumerate(x)
        }
        for gate in self.gates:
            result = gate_function(gate.kind, [values[w] for w in gate.inputs])
            values.update(zip(gate.outputs, result))
        return "".join(str(values[w]) for w in self.outputs)

    def to_graph(self) -> nx.DiGraph:
        """
        Dependency graph

        Nodes are input ports ``in<i>``, gates ``g<index>`` and output ports
        ``out<j>``; each edge carries the wire it stands for.
        """
        graph = nx.DiGraph()
        for wire in self.input_wires:
            graph.add_node(wire, type="input")
        for index, gate in enumerate(self.gates):
            node = f"g{index}"
            graph.add_node(node, type=gate.kind.value)
            for wire in gate.inputs:
                graph.add_edge(self._node_of(wire), node, wire=wire)
        for j, wire in enumerate(self.outputs, start=1):
            graph.add_node(f"out{j}", type="output")
            graph.add_edge(self._node_of(wire), f"out{j}", wire=wire)
        return graph

    def _node_of(self, wire: str) -> str:
        index = self.producers[wire]
        return wire if index < 0 else f"g{index}"

    def to_text(self) -> str:
        return format_netlist(self)

    @classmethod
    def from_text(cls, text: str) -> "Circuit":
        return parse_netlist(text)

    def __str__(self) -> str:
        return f"Circuit(m={self.input_count}, n={self.output_count}, gates={len(self.gates)})"


class CircuitBuilder:
    """
    Incremental circuit construction with fresh wire names

    Example:
        builder = CircuitBuilder(2)
        (out,) = builder.add(GateKind.AND, "in1", "in2")
        circuit = builder.build([out])
    """

    def __init__(self, input_count: int, first_id: int = 1) -> None:
        self.input_count = input_count
        self.gates: List[Gate] = []
        self._next_id = first_id

    @property
    def inputs(self) -> Tuple[str, ...]:
        return tuple(input_wire(i) for i in range(1, self.input_count + 1))

    def fresh(self) -> str:
        wire = f"w{self._next_id}"
        self._next_id += 1
        return wire

    def add(self, kind: GateKind, *inputs: str) -> Tuple[str, ...]:
        """Append a gate and return its output wires"""
        outputs = tuple(self.fresh() for _ in range(ARITY[kind][1]))
        self.gates.append(Gate(kind, tuple(inputs), outputs))
        return outputs

    def add1(self, kind: GateKind, *inputs: str) -> str:
        """Append a single-output gate"""
        return self.add(kind, *inputs)[0]

    def build(self, outputs: Iterable[str], name: str = "circuit") -> Circuit:
        return Circuit(self.input_count, tuple(self.gates), tuple(outputs), name=name)


# ============================================================================
# NETLIST TEXT FORMAT
# ============================================================================

_HEADER_RE = re.compile(r"^circuit\s+inputs=(\d+)\s+outputs=(\d+)$")
_GATE_RE = re.compile(r"^([\w,\s]+?)\s*=\s*([A-Z]+)((?:\s+\w+)*)$")
_WIRE_RE = re.compile(r"^(in\d+|w\d+)$")


def _malformed(line_no: int, message: str) -> CircuitError:
    return CircuitError(ErrorCode.MALFORMED_INPUT, f"line {line_no}: {message}")


def parse_netlist(text: str) -> Circuit:
    """
    Parse the netlist text format

    Raises:
        CircuitError: MALFORMED_INPUT on any syntax or reference error
    """
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise CircuitError(ErrorCode.MALFORMED_INPUT, "empty netlist")
    header = _HEADER_RE.match(lines[0][1])
    if not header:
        raise _malformed(lines[0][0], "expected 'circuit inputs=<m> outputs=<n>'")
    m, n = int(header.group(1)), int(header.group(2))

    gates: List[Gate] = []
    outputs: Optional[Tuple[str, ...]] = None
    for no, line in lines[1:]:
        if outputs is not None:
            raise _malformed(no, "content after the outputs line")
        if line == "outputs" or line.startswith("outputs "):
            outputs = tuple(line.split()[1:])
            continue
        match = _GATE_RE.match(line)
        if not match:
            raise _malformed(no, f"cannot parse {line!r}")
        targets = tuple(t.strip() for t in match.group(1).split(","))
        try:
            kind = GateKind(match.group(2))
        except ValueError:
            raise _malformed(no, f"unknown gate kind {match.group(2)!r}") from None
        args = tuple(match.group(3).split())
        for wire in targets + args:
            if not _WIRE_RE.match(wire):
                raise _malformed(no, f"bad wire name {wire!r}")
        if any(t.startswith("in") for t in targets):
            raise _malformed(no, "gates cannot redefine input ports")
        try:
            gates.append(Gate(kind, args, targets))
        except CircuitError as exc:
            raise _malformed(no, exc.message) from None

    if outputs is None:
        raise CircuitError(ErrorCode.MALFORMED_INPUT, "missing 'outputs' line")
    if len(outputs) != n:
        raise CircuitError(
            ErrorCode.MALFORMED_INPUT, f"header declares {n} outputs, found {len(outputs)}"
        )
    return Circuit(m, tuple(gates), outputs)


def format_netlist(circuit: Circuit) -> str:
    lines = [f"circuit inputs={circuit.input_count} outputs={circuit.output_count}"]
    lines.extend(str(gate) for gate in circuit.gates)
    lines.append(" ".join(["outputs", *circuit.outputs]))
    return "\n".join(lines) + "\n"


def eval_circuit(circuit: Circuit, x: Word) -> Word:
    """
    Input-output function of a circuit at x

    Raises:
        CircuitError: LENGTH_MISMATCH if |x| != m

    Example:
        >>> builder = CircuitBuilder(2)
        >>> c = builder.build([builder.add1(GateKind.AND, "in1", "in2")])
        >>> eval_circuit(c, "11")
        '1'
    """
    return circuit.evaluate(x)


def circuit_size(circuit: Circuit) -> int:
    return circuit.size


def single_gate(kind: GateKind) -> Circuit:
    """Circuit made of one gate on fresh ports"""
    builder = CircuitBuilder(ARITY[kind][0])
    return builder.build(builder.add(kind, *builder.inputs))


def identity_circuit(m: int) -> Circuit:
    """Pass-through circuit with no gates"""
    return Circuit(m, (), tuple(input_wire(i) for i in range(1, m + 1)))
