"""
Circuits and Lep Words

Translation between circuits over {AND, OR, NOT, FORK, ID, SWAP} and words
over {gamma_and, gamma_or, gamma_not, gamma_fork} and transpositions.

A word acts on a tape: gamma_and/gamma_or read positions 1 and 2 and leave
the result at position 1, gamma_not rewrites position 1, gamma_fork
duplicates it and τ(i,j) swaps two positions. A circuit is emitted gate by
gate by fetching operands to the front; ID and SWAP gates only relabel
tape positions.
"""

from typing import List, Optional, Tuple

from loguru import logger

from thompx.circuits.netlist import SUGAR_KINDS, Circuit, CircuitBuilder, GateKind
from thompx.circuits.transforms import normalize_fanout
from thompx.compiler.report import CompileReport
from thompx.core.errors import CompileError, ErrorCode
from thompx.generators.catalog import LEP_GENERATORS, Token, gen, tau
from thompx.generators.words import GeneratorWord, as_word

# (required tape length, length change) per lep generator
_TAPE_EFFECT = {
    "gamma_and": (2, -1),
    "gamma_or": (2, -1),
    "gamma_not": (1, 0),
    "gamma_fork": (1, 1),
}
_GAMMA = {
    GateKind.AND: "gamma_and",
    GateKind.OR: "gamma_or",
    GateKind.NOT: "gamma_not",
    GateKind.FORK: "gamma_fork",
}


def is_lep_token(token: Token) -> bool:
    return token.is_tau or token in LEP_GENERATORS


def tape_effect(token: Token) -> Tuple[int, int]:
    """(tape length needed, tape length change) of a lep-basis token"""
    if token.is_tau:
        return token.j, 0
    return _TAPE_EFFECT[token.name]


class _Tape:
    """Wire labels by tape position, with τ emission"""

    def __init__(self, wires) -> None:
        self.cells: List[str] = list(wires)
        self.tokens: List[Token] = []

    def fetch(self, wire: str, position: int) -> None:
        current = self.cells.index(wire) + 1
        if current != position:
            i, j = sorted((current, position))
            self.tokens.append(tau(i, j))
            self.cells[i - 1], self.cells[j - 1] = self.cells[j - 1], self.cells[i - 1]


def circuit_to_lep_word(circuit: Circuit) -> CompileReport:
    """
    Lep-basis word computing a circuit's function

    The word evaluated on any x of length m (followed by any suffix) yields
    C(x) followed by the same suffix.

    Raises:
        CompileError: NOT_DESUGARED if XOR/CNOT/CCNOT gates remain,
            EMPTY_INPUT if exactly one of m, n is zero

    Example:
        >>> from thompx.circuits.netlist import single_gate
        >>> str(circuit_to_lep_word(single_gate(GateKind.AND)).word)
        'gamma_and'
    """
    if circuit.kinds() & SUGAR_KINDS:
        raise CompileError(ErrorCode.NOT_DESUGARED, "desugar XOR, CNOT and CCNOT first")
    m, n = circuit.input_count, circuit.output_count
    if m == 0 and n == 0:
        return CompileReport(GeneratorWord(), circuit.size, kind="lep")
    if m == 0 or n == 0:
        raise CompileError(
            ErrorCode.EMPTY_INPUT, f"lep words cannot realize a {m}-input {n}-output circuit"
        )

    source = normalize_fanout(circuit)
    tape = _Tape(source.input_wires)
    for gate in source.gates:
        kind = gate.kind
        if kind is GateKind.ID:
            tape.cells[tape.cells.index(gate.inputs[0])] = gate.outputs[0]
            continue
        if kind is GateKind.SWAP:
            a = tape.cells.index(gate.inputs[0])
            b = tape.cells.index(gate.inputs[1])
            tape.cells[b], tape.cells[a] = gate.outputs
            continue
        tape.fetch(gate.inputs[0], 1)
        if kind in (GateKind.AND, GateKind.OR):
            tape.fetch(gate.inputs[1], 2)
            tape.cells[:2] = [gate.outputs[0]]
        elif kind is GateKind.NOT:
            tape.cells[0] = gate.outputs[0]
        else:
            tape.cells[:1] = list(gate.outputs)
        tape.tokens.append(gen(_GAMMA[kind]))

    for position, wire in enumerate(source.outputs, start=1):
        tape.fetch(wire, position)

    word = GeneratorWord(tuple(tape.tokens))
    logger.debug("Lep word of length {} for a circuit of size {}", len(word), circuit.size)
    return CompileReport(word, circuit.size, kind="lep")


def required_input_length(word: GeneratorWord) -> int:
    """Shortest tape length on which every token of a lep word is defined"""
    needed, offset = 0, 0
    for token in word:
        need, delta = tape_effect(token)
        needed = max(needed, need - offset)
        offset += delta
    return needed


def lep_word_to_circuit(word, input_count: Optional[int] = None) -> Circuit:
    """
    Read a lep-basis word as a circuit of size |w| + m + n

    Args:
        word: Word over gamma_and, gamma_or, gamma_not, gamma_fork and τ
        input_count: Tape length to use if larger than the word requires

    Raises:
        CompileError: NOT_LEP for any other token
    """
    word = as_word(word)
    for token in word:
        if not is_lep_token(token):
            raise CompileError(ErrorCode.NOT_LEP, f"{token} is not a lep-basis generator")
    m = max(required_input_length(word), input_count or 0, 1)

    builder = CircuitBuilder(m)
    cells = list(builder.inputs)
    for token in word:
        if token.is_tau:
            i, j = token.i - 1, token.j - 1
            cells[i], cells[j] = builder.add(GateKind.SWAP, cells[i], cells[j])
        elif token.name == "gamma_fork":
            cells[:1] = builder.add(GateKind.FORK, cells[0])
        elif token.name == "gamma_not":
            cells[0] = builder.add1(GateKind.NOT, cells[0])
        else:
            kind = GateKind.AND if token.name == "gamma_and" else GateKind.OR
            cells[:2] = [builder.add1(kind, cells[0], cells[1])]
    return builder.build(cells, name="lep")
