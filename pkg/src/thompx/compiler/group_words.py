"""
Group Words for Circuits

Compiles a circuit C_f into a word W_f over the G_{2,1} generators and
transpositions with

    W_f(0 x) = 0 f(x) x        for every x in {0,1}^m

and a pair of mutually inverse circuits into a word with 0x -> 0 g(x).

The circuit is layered into slices c_1..c_L with wire vectors
y(0) = x, y(1), ..., y(L) = f(x). The slice word for c maps
0 y(l-1) R to 0 y(l) y(l-1) R, so after all slices the tape holds the whole
stack 0 y(L) ... y(0). The output block is then moved to the end, the
stack of the first L-1 slices is undone, and the two remaining blocks are
swapped.

A slice word is assembled gate by gate. For a slice C = K + g with K
reading m wires and writing n wires, the gate g reads the wires right
after K's inputs. Each gate contributes a prefix before W_K and a suffix
after it (application order):

    ID, NOT   sigma, τ(3,m+3), phi_or, [phi_not], τ(3,m+3),
              move 1 -> m+2  |  W_K  |  move n+m+2 -> n+2
    AND, OR   sigma, τ(2,m+3), τ(3,m+4), phi_op, τ(3,m+4), τ(2,m+3),
              move 1 -> m+2  |  W_K  |  move n+m+2 -> n+2
    FORK      sigma, sigma, τ(3,m+4), phi_or, τ(1,m+4), phi_or,
              move 1 -> m+3, move 2 -> m+2  |  W_K  |
              move n+m+2 -> n+2, move n+m+3 -> n+3
"""

from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from thompx.circuits.netlist import (
    SUGAR_KINDS,
    Circuit,
    Gate,
    GateKind,
    gate_function,
    input_wire,
)
from thompx.circuits.transforms import (
    Slice,
    explicit_form,
    has_explicit_fanout,
    layerize,
    slice_circuit,
)
from thompx.circuits.truth_table import truth_table_of
from thompx.codes.words import Word, all_words
from thompx.compiler.report import CompileReport
from thompx.core.config import get_config
from thompx.core.errors import CompileError, ErrorCode
from thompx.generators.catalog import Token, tau_or_none
from thompx.generators.words import (
    GeneratorWord,
    apply_word,
    concat,
    move_letter,
    permutation_word,
    word_inverse,
)

SIGMA = Token("sigma")
PHI = {
    GateKind.AND: Token("phi_and"),
    GateKind.OR: Token("phi_or"),
    GateKind.NOT: Token("phi_not"),
}


def _w(*tokens: Optional[Token]) -> GeneratorWord:
    return GeneratorWord.of(tokens)


# ============================================================================
# GADGETS
# ============================================================================


def gate_gadget(kind: GateKind, m: int, n: int) -> Tuple[GeneratorWord, GeneratorWord]:
    """
    (prefix, suffix) words for one gate after a partial slice K

    Args:
        kind: ID, NOT, AND, OR or FORK
        m: Number of wires K reads
        n: Number of wires K writes
    """
    if kind in (GateKind.ID, GateKind.NOT):
        swap = tau_or_none(3, m + 3)
        logic = [PHI[GateKind.OR]] + ([PHI[GateKind.NOT]] if kind is GateKind.NOT else [])
        prefix = _w(SIGMA, swap, *logic, swap) + move_letter(1, m + 2)
        suffix = move_letter(n + m + 2, n + 2)
    elif kind in (GateKind.AND, GateKind.OR):
        outer, inner = tau_or_none(2, m + 3), tau_or_none(3, m + 4)
        prefix = _w(SIGMA, outer, inner, PHI[kind], inner, outer) + move_letter(1, m + 2)
        suffix = move_letter(n + m + 2, n + 2)
    elif kind is GateKind.FORK:
        prefix = (
            _w(SIGMA, SIGMA, tau_or_none(3, m + 4), PHI[GateKind.OR], tau_or_none(1, m + 4))
            + _w(PHI[GateKind.OR])
            + move_letter(1, m + 3)
            + move_letter(2, m + 2)
        )
        suffix = move_letter(n + m + 2, n + 2) + move_letter(n + m + 3, n + 3)
    else:
        raise CompileError(ErrorCode.NOT_DESUGARED, f"no gadget for {kind.value}")
    return prefix, suffix


def _gadget_kinds(gate: Gate) -> List[GateKind]:
    # a crossing carries each of its wires with an identity gadget
    if gate.kind is GateKind.SWAP:
        return [GateKind.ID, GateKind.ID]
    return [gate.kind]


def gadget_labels(gate: Gate) -> Tuple[str, ...]:
    """Wires left by a gate's gadgets, in gadget order"""
    if gate.kind is GateKind.SWAP:
        return (gate.outputs[1], gate.outputs[0])
    return gate.outputs


def stacked_gates_word(gates: Sequence[Gate]) -> GeneratorWord:
    """0 a R -> 0 b a R for the concatenated inputs a and gadget outputs b"""
    prefixes: List[GeneratorWord] = []
    suffixes: List[GeneratorWord] = []
    m = n = 0
    for gate in gates:
        for kind in _gadget_kinds(gate):
            prefix, suffix = gate_gadget(kind, m, n)
            prefixes.append(prefix)
            suffixes.append(suffix)
            m += 1 if gate.kind is GateKind.SWAP else len(gate.inputs)
            n += 1 if gate.kind is GateKind.SWAP else len(gate.outputs)
    return concat(list(reversed(prefixes)) + suffixes)


def slice_word(piece: Slice) -> GeneratorWord:
    """
    0 y(l-1) R -> 0 y(l) y(l-1) R for one slice

    The input block is brought into gate order, the gadgets run, the copy
    of the input block is put back into its original order and the new
    block into the slice's output order.
    """
    width = len(piece.inputs)
    gate_inputs = piece.gate_inputs
    labels = [w for g in piece.gates for w in gadget_labels(g)]

    into_gates = [piece.inputs.index(w) for w in gate_inputs]
    back = [gate_inputs.index(w) for w in piece.inputs]
    into_outputs = [labels.index(w) for w in piece.outputs]
    word = concat(
        [
            permutation_word(into_gates, offset=1),
            stacked_gates_word(piece.gates),
            permutation_word(back, offset=len(labels) + 1),
            permutation_word(into_outputs, offset=1),
        ]
    )
    logger.debug(
        "Slice {}{}: {} gates, {} -> {} wires, {} tokens",
        piece.index,
        " (crossing)" if piece.is_crossing else "",
        len(piece.gates),
        width,
        len(piece.outputs),
        len(word),
    )
    return word


def block_swap(first: int, second: int, offset: int = 1) -> GeneratorWord:
    """Adjacent transpositions taking blocks (A, B) to (B, A) after `offset` letters"""
    order = list(range(first, first + second)) + list(range(first))
    return permutation_word(order, offset=offset)


# ============================================================================
# STACKING CHECK
# ============================================================================


def _wire_values(circuit: Circuit, x: Word) -> Dict[str, str]:
    values = {input_wire(i + 1): bit for i, bit in enumerate(x)}
    for gate in circuit.gates:
        result = gate_function(gate.kind, [int(values[w]) for w in gate.inputs])
        values.update(zip(gate.outputs, (str(b) for b in result)))
    return values


def _check_stacking(
    layered: Circuit, slices: Sequence[Slice], words: Sequence[GeneratorWord]
) -> None:
    for x in all_words(2, layered.input_count):
        values = _wire_values(layered, x)
        prefix = GeneratorWord()
        stack = "".join(values[w] for w in slices[0].inputs) if slices else x
        for piece, word in zip(slices, words):
            prefix = prefix + word
            stack = "".join(values[w] for w in piece.outputs) + stack
            if apply_word(prefix, "0" + x) != "0" + stack:
                raise AssertionError(f"slice {piece.index} breaks the wire stack on input {x}")


# ============================================================================
# COMPILERS
# ============================================================================


def compile_wf(circuit: Circuit, debug: Optional[bool] = None) -> CompileReport:
    """
    Group word with 0x -> 0 f(x) x

    The circuit must already be in explicit form (see ``explicit_form``):
    every fork is a gate, so its size counts all copies of a wire. Every
    transposition index then stays within size^2 + 2.

    Args:
        circuit: Desugared circuit with explicit fanout and m, n >= 1
        debug: Check the slice stack on every input after each slice;
            defaults to the synthesis config

    Raises:
        CompileError: NOT_DESUGARED, IMPLICIT_FANOUT, EMPTY_INPUT,
            TAU_BOUND_EXCEEDED
    """
    if circuit.kinds() & SUGAR_KINDS:
        raise CompileError(ErrorCode.NOT_DESUGARED, "desugar XOR, CNOT and CCNOT first")
    if not has_explicit_fanout(circuit):
        raise CompileError(
            ErrorCode.IMPLICIT_FANOUT,
            "a wire is read more than once or never; compile explicit_form(circuit)",
        )
    m, n = circuit.input_count, circuit.output_count
    if m == 0 or n == 0:
        raise CompileError(ErrorCode.EMPTY_INPUT, f"need m, n >= 1, got m={m} n={n}")

    settings = get_config().synthesis
    layered = layerize(circuit)
    slices = slice_circuit(layered)
    words = [slice_word(piece) for piece in slices]
    check = settings.debug_slices if debug is None else debug
    if check and m <= settings.debug_slice_max_inputs:
        _check_stacking(layered, slices, words)

    stack = sum(len(piece.outputs) for piece in slices) + m
    word = concat(
        [
            concat(words),
            block_swap(n, stack - n),
            word_inverse(concat(words[:-1])),
            block_swap(m, n),
        ]
    )
    report = CompileReport(word, circuit.size, kind="wf")
    bound = circuit.size**2 + 2
    if report.max_tau > bound:
        raise CompileError(
            ErrorCode.TAU_BOUND_EXCEEDED,
            f"largest transposition index {report.max_tau} exceeds size^2 + 2 = {bound}",
        )
    logger.debug(
        "W_f: {} slices, {} tokens, max tau {}", len(slices), report.word_length, report.max_tau
    )
    return report


def compile_pair(
    forward: Circuit, backward: Circuit, cap: Optional[int] = None
) -> CompileReport:
    """
    Group word with 0x -> 0 g(x) for a pair of inverse circuits

    W_g, then the block swap 0 g(x) x -> 0 x g(x), then the inverse of
    W_(g^-1).

    Raises:
        CompileError: NOT_INVERSE_PAIR unless the circuits compute mutually
            inverse permutations, CAP_EXCEEDED if m exceeds the pair cap
    """
    cap = get_config().synthesis.pair_cap if cap is None else cap
    forward, backward = explicit_form(forward), explicit_form(backward)
    m = forward.input_count
    if m > cap:
        raise CompileError(ErrorCode.CAP_EXCEEDED, f"m = {m} exceeds the pair cap {cap}")
    shapes = {
        (forward.input_count, forward.output_count),
        (backward.input_count, backward.output_count),
    }
    if shapes != {(m, m)}:
        raise CompileError(ErrorCode.NOT_INVERSE_PAIR, "both circuits must be m -> m")
    table = truth_table_of(forward)
    if not table.is_bijective or table.inverse() != truth_table_of(backward):
        raise CompileError(ErrorCode.NOT_INVERSE_PAIR, "circuits are not mutually inverse")

    word = concat(
        [
            compile_wf(forward).word,
            block_swap(m, m),
            word_inverse(compile_wf(backward).word),
        ]
    )
    return CompileReport(word, forward.size + backward.size, kind="pair")


# ============================================================================
# CONTRACTS
# ============================================================================


def check_wf_contract(report: CompileReport, circuit: Circuit) -> List[Word]:
    """Inputs x where the word fails 0x -> 0 f(x) x"""
    table = truth_table_of(circuit)
    return [x for x, y in table if apply_word(report.word, "0" + x) != "0" + y + x]


def check_pair_contract(report: CompileReport, forward: Circuit) -> List[Word]:
    """Inputs x where 0x -> 0 g(x) or its inverse on the 0 side fails"""
    table = truth_table_of(forward)
    inverse = word_inverse(report.word)
    failures = []
    for x, y in table:
        if apply_word(report.word, "0" + x) != "0" + y or apply_word(inverse, "0" + y) != "0" + x:
            failures.append(x)
    return failures


def check_embedding_relation(report: CompileReport, forward: Circuit) -> List[Word]:
    """
    Inputs where W composed after (g)_0^-1 moves 0x

    The composite must fix the 0 cone pointwise: W(0 g^-1(x)) = 0x.
    """
    inverse = truth_table_of(forward).inverse()
    return [x for x, pre in inverse if apply_word(report.word, "0" + pre) != "0" + x]


def _apply_extended(word: GeneratorWord, z: Word, cap: int) -> Tuple[Optional[Word], Word]:
    # an image on z extends to every z·s, so padding never changes the answer
    while True:
        image = apply_word(word, z)
        if image is not None or len(z) >= cap:
            return image, z
        z = z + "0" * min(len(z), cap - len(z))


def check_stab01(report: CompileReport, m: int, tails: Sequence[Word]) -> List[Tuple[str, Word]]:
    """
    Points showing the element is not in Stab(0,1) or W W^-1 is not 1

    Checked by application, never by building the element:

    - every 0x, x in {0,1}^m, goes to 0·{0,1}^m and the images are distinct,
      so the 0 cone is mapped onto itself;
    - each tail t gives 0t and 1t, which must stay in their cone under W
      and under W^-1, and come back unchanged after W then W^-1.

    Inputs are padded with zeros until the word is defined on them; since
    only sigma changes the length, and by one letter, max_tau + |W| + 2
    letters always suffice.
    """
    word, inverse = report.word, word_inverse(report.word)
    cap = report.max_tau + report.word_length + 2
    failures: List[Tuple[str, Word]] = []

    images = set()
    for x in all_words(2, m):
        image = apply_word(word, "0" + x)
        if image is None or len(image) != m + 1 or image[0] != "0":
            failures.append(("zero_cone", x))
        images.add(image)
    if len(images) != 1 << m:
        failures.append(("zero_cone_onto", ""))

    for tail in tails:
        for letter in "01":
            image, z = _apply_extended(word, letter + tail, cap)
            if image is None or image[0] != letter:
                failures.append(("cone", letter + tail))
                continue
            back = apply_word(inverse, image)
            if back != z:
                failures.append(("inverse", letter + tail))
            pre, _ = _apply_extended(inverse, letter + tail, cap)
            if pre is None or pre[0] != letter:
                failures.append(("inverse_cone", letter + tail))
    return failures
