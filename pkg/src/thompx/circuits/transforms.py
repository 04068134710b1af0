"""
Circuit Transforms

Function-preserving rewrites: sugar expansion, explicit fanout, strict
layering and slicing.

A layered circuit is consumed slice by slice. Each slice reads the
previous slice's wire vector (the inputs for slice 1), every wire in that
vector feeds exactly one gate, and the gates of one slice are either all
logic gates (AND, OR, NOT, FORK, ID) or all wire crossings (SWAP, ID).
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from thompx.circuits.netlist import (
    SUGAR_KINDS,
    Circuit,
    CircuitBuilder,
    Gate,
    GateKind,
)
from thompx.core.errors import CircuitError, ErrorCode

_ID_RE = re.compile(r"^w(\d+)$")


def _first_free_id(circuit: Circuit) -> int:
    ids = [int(m.group(1)) for m in map(_ID_RE.match, circuit.wires) if m]
    return max(ids, default=0) + 1


# ============================================================================
# SUGAR
# ============================================================================


def _xor(builder: CircuitBuilder, a: str, b: str) -> str:
    # (a or b) and not (a and b)
    a1, a2 = builder.add(GateKind.FORK, a)
    b1, b2 = builder.add(GateKind.FORK, b)
    either = builder.add1(GateKind.OR, a1, b1)
    both = builder.add1(GateKind.AND, a2, b2)
    return builder.add1(GateKind.AND, either, builder.add1(GateKind.NOT, both))


def desugar(circuit: Circuit) -> Circuit:
    """
    Expand XOR, CNOT and CCNOT over {AND, OR, NOT, FORK}

    A circuit without sugar is returned unchanged (same object).
    """
    if not circuit.kinds() & SUGAR_KINDS:
        return circuit
    builder = CircuitBuilder(circuit.input_count)
    rename: Dict[str, str] = {w: w for w in circuit.input_wires}
    for gate in circuit.gates:
        args = [rename[w] for w in gate.inputs]
        if gate.kind is GateKind.XOR:
            outputs: Tuple[str, ...] = (_xor(builder, *args),)
        elif gate.kind is GateKind.CNOT:
            a1, a2 = builder.add(GateKind.FORK, args[0])
            outputs = (a1, _xor(builder, a2, args[1]))
        elif gate.kind is GateKind.CCNOT:
            a1, a2 = builder.add(GateKind.FORK, args[0])
            b1, b2 = builder.add(GateKind.FORK, args[1])
            product = builder.add1(GateKind.AND, a2, b2)
            outputs = (a1, b1, _xor(builder, product, args[2]))
        else:
            outputs = builder.add(gate.kind, *args)
        rename.update(zip(gate.outputs, outputs))
    result = builder.build((rename[w] for w in circuit.outputs), name=circuit.name)
    logger.debug("Desugared {} gates into {}", len(circuit.gates), len(result.gates))
    return result


# ============================================================================
# FANOUT
# ============================================================================


def has_explicit_fanout(circuit: Circuit) -> bool:
    """Every wire feeds exactly one gate input or output port"""
    return all(count == 1 for count in circuit.uses().values())


def normalize_fanout(circuit: Circuit) -> Circuit:
    """
    Make every wire feed exactly one gate input or output port

    Repeated uses get an explicit FORK chain. A dangling wire d is erased by
    ``fork d -> (d1, d2); z = AND d1 (NOT d2)`` and the constant-0 wire z is
    OR-ed into the first output at the end. Erasure is skipped when the
    circuit has no outputs.
    """
    uses = circuit.uses()
    builder = CircuitBuilder(circuit.input_count)
    copies: Dict[str, List[str]] = {}
    dangling: List[str] = []

    def distribute(old: str, new: str) -> None:
        count = uses[old]
        if count == 0:
            dangling.append(new)
            return
        pool: List[str] = []
        current = new
        for _ in range(count - 1):
            first, current = builder.add(GateKind.FORK, current)
            pool.append(first)
        pool.append(current)
        copies[old] = pool

    for wire in circuit.input_wires:
        distribute(wire, wire)
    for gate in circuit.gates:
        args = [copies[w].pop(0) for w in gate.inputs]
        for old, new in zip(gate.outputs, builder.add(gate.kind, *args)):
            distribute(old, new)

    outputs = [copies[w].pop(0) for w in circuit.outputs]
    if outputs and dangling:
        for wire in dangling:
            d1, d2 = builder.add(GateKind.FORK, wire)
            zero = builder.add1(GateKind.AND, d1, builder.add1(GateKind.NOT, d2))
            outputs[0] = builder.add1(GateKind.OR, outputs[0], zero)
        logger.debug("Erased {} dangling wires", len(dangling))
    return builder.build(outputs, name=circuit.name)


def explicit_form(circuit: Circuit) -> Circuit:
    """Desugared circuit in which every wire is used exactly once"""
    return normalize_fanout(desugar(circuit))


# ============================================================================
# LAYERING
# ============================================================================


@dataclass(frozen=True)
class Slice:
    """
    One layer of a strictly layered circuit

    Attributes:
        index: 1-based layer number
        gates: Gates in canonical order (by position of their first input)
        inputs: Wire vector read by this slice
        outputs: Wire vector handed to the next slice; for the last slice
            this is the circuit's output order
    """

    index: int
    gates: Tuple[Gate, ...]
    inputs: Tuple[str, ...]
    outputs: Tuple[str, ...]

    @property
    def is_crossing(self) -> bool:
        """Pure wire-crossing slice (only SWAP and ID gates)"""
        return all(g.kind in (GateKind.SWAP, GateKind.ID) for g in self.gates)

    @property
    def gate_inputs(self) -> Tuple[str, ...]:
        return tuple(w for g in self.gates for w in g.inputs)

    def sources(self) -> Tuple[Tuple[int, ...], ...]:
        """0-based positions in ``inputs`` read by each gate"""
        position = {w: p for p, w in enumerate(self.inputs)}
        return tuple(tuple(position[w] for w in g.inputs) for g in self.gates)


def _levels(circuit: Circuit) -> List[int]:
    # logic gates on odd levels, crossings on even ones
    wire_level = {w: 0 for w in circuit.input_wires}
    levels: List[int] = []
    for gate in circuit.gates:
        base = max((wire_level[w] for w in gate.inputs), default=0) + 1
        parity = 0 if gate.kind is GateKind.SWAP else 1
        level = base if base % 2 == parity else base + 1
        levels.append(level)
        for w in gate.outputs:
            wire_level[w] = level
    used = sorted(set(levels))
    compress = {level: rank for rank, level in enumerate(used, start=1)}
    return [compress[level] for level in levels]


def layerize(circuit: Circuit) -> Circuit:
    """
    Strictly layered equivalent of a circuit

    Sugar is expanded and fanout made explicit first. Every wire then spans
    exactly one layer: ID chains carry wires across skipped layers and carry
    outputs to the last layer. Crossing gates never share a layer with
    logic gates. A circuit without gates gets one ID layer.
    """
    source = explicit_form(circuit)
    gate_layer = _levels(source)
    depth = max(gate_layer, default=0) or (1 if source.outputs else 0)

    wire_level: Dict[str, int] = {w: 0 for w in source.input_wires}
    for gate, layer in zip(source.gates, gate_layer):
        for w in gate.outputs:
            wire_level[w] = layer

    next_id = [_first_free_id(source)]
    layers: Dict[int, List[Gate]] = {layer: [] for layer in range(1, depth + 1)}
    added = 0

    def carry(wire: str, target: int) -> str:
        nonlocal added
        for layer in range(wire_level[wire] + 1, target + 1):
            fresh = f"w{next_id[0]}"
            next_id[0] += 1
            layers[layer].append(Gate(GateKind.ID, (wire,), (fresh,)))
            wire_level[fresh] = layer
            wire = fresh
            added += 1
        return wire

    for gate, layer in zip(source.gates, gate_layer):
        args = tuple(carry(w, layer - 1) for w in gate.inputs)
        layers[layer].append(Gate(gate.kind, args, gate.outputs))
    outputs = tuple(carry(w, depth) for w in source.outputs)

    ordered: List[Gate] = []
    vector: Sequence[str] = source.input_wires
    for layer in range(1, depth + 1):
        position = {w: p for p, w in enumerate(vector)}
        gates = sorted(layers[layer], key=lambda g: position[g.inputs[0]])
        ordered.extend(gates)
        vector = [w for g in gates for w in g.outputs]

    logger.debug(
        "Layered circuit: {} layers, {} ID gates added to {} gates",
        depth,
        added,
        len(source.gates),
    )
    return Circuit(source.input_count, tuple(ordered), outputs, name=circuit.name)


def slice_circuit(circuit: Circuit) -> List[Slice]:
    """
    Split a strictly layered circuit into slices

    Raises:
        CircuitError: NOT_LAYERED unless every wire spans exactly one layer,
            every wire is used exactly once and no layer mixes crossings
            with logic gates
    """
    if not circuit.gates:
        if circuit.input_count or circuit.output_count:
            raise CircuitError(ErrorCode.NOT_LAYERED, "circuit has no layers")
        return []
    if circuit.kinds() & SUGAR_KINDS:
        raise CircuitError(ErrorCode.NOT_LAYERED, "sugar gates cannot be sliced")
    if not has_explicit_fanout(circuit):
        raise CircuitError(ErrorCode.NOT_LAYERED, "every wire must be used exactly once")

    wire_level = {w: 0 for w in circuit.input_wires}
    by_layer: Dict[int, List[Gate]] = {}
    for gate in circuit.gates:
        levels = {wire_level[w] for w in gate.inputs}
        if len(levels) != 1:
            raise CircuitError(
                ErrorCode.NOT_LAYERED, f"gate {gate} reads wires from several layers"
            )
        layer = levels.pop() + 1
        by_layer.setdefault(layer, []).append(gate)
        for w in gate.outputs:
            wire_level[w] = layer

    depth = max(by_layer)
    if any(wire_level[w] != depth for w in circuit.outputs):
        raise CircuitError(ErrorCode.NOT_LAYERED, "outputs must all leave the last layer")

    slices: List[Slice] = []
    vector: Tuple[str, ...] = circuit.input_wires
    for layer in range(1, depth + 1):
        gates = by_layer.get(layer, [])
        kinds = {g.kind for g in gates}
        if GateKind.SWAP in kinds and kinds - {GateKind.SWAP, GateKind.ID}:
            raise CircuitError(ErrorCode.NOT_LAYERED, f"layer {layer} mixes SWAP with logic")
        position = {w: p for p, w in enumerate(vector)}
        gates = sorted(gates, key=lambda g: position[g.inputs[0]])
        produced = tuple(w for g in gates for w in g.outputs)
        outputs = circuit.outputs if layer == depth else produced
        slices.append(Slice(layer, tuple(gates), vector, outputs))
        vector = outputs
    return slices


def added_id_count(original: Circuit, layered: Circuit) -> int:
    """ID gates introduced by layering"""
    source = explicit_form(original)
    before = sum(1 for g in source.gates if g.kind is GateKind.ID)
    after = sum(1 for g in layered.gates if g.kind is GateKind.ID)
    return after - before
