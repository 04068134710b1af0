"""
Lep Normalization

Rewrites any word over the monoid catalog whose value is a lep element
into a word over the lep basis {gamma_and, gamma_or, gamma_not,
gamma_fork} ∪ τ with the same value.

The factors of the word are first put in direct composable form. The
evaluation is then tracked on a register of fixed width W_i holding the
current word left-aligned, zero padded on the right. Lep-basis tokens
that fit the register are emitted as they are. Any other factor becomes
a circuit on the register: a sum-of-products block rewrites the head and
writes the image right-aligned in a V-bit field together with its offset
in binary, a barrel shifter closes the gap, and the register is cut or
padded to the next width. That circuit is translated to a lep word.
"""

from typing import List, Sequence, Tuple

from loguru import logger

from thompx.circuits.netlist import Circuit, CircuitBuilder, GateKind
from thompx.circuits.reversible import build_sop, constant_zero
from thompx.circuits.truth_table import TruthTable
from thompx.codes.words import all_words, int_to_word
from thompx.compiler.lep import circuit_to_lep_word, is_lep_token, tape_effect
from thompx.compiler.report import CompileReport
from thompx.core.errors import CompileError, ErrorCode
from thompx.generators.catalog import Token, gen_table
from thompx.generators.words import GeneratorWord, as_word, concat, eval_word
from thompx.thompson.chains import direct_composable_chain
from thompx.thompson.element import identity_element
from thompx.thompson.table import MorphismTable


def register_widths(chain: Sequence[MorphismTable], first: int, last: int) -> List[int]:
    """
    W_1, ..., W_(N+1) for a direct composable chain

    W_(i+1) = max(1, W_i + largest length gain of Φ_i); the final width is
    pinned to the output length of the composite.
    """
    widths = [first]
    for table in chain:
        gain = max(len(q) - len(p) for p, q in table.entries)
        widths.append(max(1, widths[-1] + gain))
    widths[-1] = last
    return widths


def _shift_network(
    builder: CircuitBuilder, vector: List[str], code: Sequence[str]
) -> List[str]:
    # zero-fill left shift by the binary number on `code` (LSB first)
    for stage, control in enumerate(code):
        distance = 1 << stage
        inverse = builder.add1(GateKind.NOT, control)
        shifted: List[str] = []
        for p, wire in enumerate(vector):
            keep = builder.add1(GateKind.AND, inverse, wire)
            if p + distance < len(vector):
                moved = builder.add1(GateKind.AND, control, vector[p + distance])
                keep = builder.add1(GateKind.OR, moved, keep)
            shifted.append(keep)
        vector = shifted
    return vector


def factor_circuit(table: MorphismTable, width: int, next_width: int) -> Circuit:
    """
    Register circuit applying one chain factor

    The head of ``min(longest key, width)`` bits (at least one) is replaced
    by its image; heads outside the domain pass through unchanged.
    """
    head = max(1, min(table.max_key_length, width))
    images: List[str] = []
    for h in all_words(2, head):
        entry = table.lookup(h)
        images.append(h if entry is None else entry[1] + h[len(entry[0]):])
    field = max(len(image) for image in images)
    offsets = [field - len(image) for image in images]
    bits = max(offsets).bit_length()

    rows = tuple(
        "0" * k + image + int_to_word(k, bits)[::-1] if bits else "0" * k + image
        for image, k in zip(images, offsets)
    )
    block = TruthTable(head, field + bits, rows)

    builder = CircuitBuilder(width)
    inputs = builder.inputs
    produced = build_sop(builder, inputs[:head], block)
    vector = produced[:field] + list(inputs[head:])
    vector = _shift_network(builder, vector, produced[field:])
    if len(vector) > next_width:
        vector = vector[:next_width]
    while len(vector) < next_width:
        vector.append(constant_zero(builder, inputs[0]))
    return builder.build(vector, name="factor")


def _fits(token: Token, width: int, next_width: int) -> bool:
    if not is_lep_token(token):
        return False
    need, delta = tape_effect(token)
    return width >= need and next_width == width + delta


def lep_normalize(word) -> CompileReport:
    """
    Lep-basis word with the same value as a lep-valued word

    Raises:
        CompileError: EMPTY_COMPOSITE if the word evaluates to the empty
            element, NOT_LEP if its value is not lep

    Example:
        >>> str(lep_normalize("gamma_and").word)
        'gamma_and'
    """
    word = as_word(word)
    element = eval_word(word)
    if element.is_empty:
        raise CompileError(ErrorCode.EMPTY_COMPOSITE, "word evaluates to the empty element")
    if not element.is_lep:
        raise CompileError(ErrorCode.NOT_LEP, "word value is not length-equality preserving")
    if element == identity_element(element.arity) or not len(word):
        return CompileReport(GeneratorWord(), len(word), kind="lep_normalize")

    chain = direct_composable_chain([gen_table(t).table for t in word])
    shift = element.length_shift or 0
    first = max(1, element.table.max_key_length, chain[0].max_key_length, 1 - shift)
    widths = register_widths(chain, first, first + shift)

    pieces: List[GeneratorWord] = []
    built = 0
    for token, table, (width, next_width) in zip(word, chain, zip(widths, widths[1:])):
        if _fits(token, width, next_width):
            pieces.append(GeneratorWord((token,)))
            continue
        pieces.append(circuit_to_lep_word(factor_circuit(table, width, next_width)).word)
        built += 1

    result = concat(pieces)
    logger.debug(
        "Lep normal form: {} tokens in, {} out, {} factors rebuilt, widths {}",
        len(word),
        len(result),
        built,
        widths,
    )
    return CompileReport(result, len(word), kind="lep_normalize")


def lep_expansion(token) -> CompileReport:
    """
    Lep-basis word for a single lep catalog generator

    Raises:
        CompileError: NOT_LEP for generators such as sigma
    """
    return lep_normalize(as_word([token]))


def expansion_ratios(tokens: Sequence[Token]) -> List[Tuple[str, int]]:
    """Word length of the lep expansion of each lep generator"""
    ratios = []
    for token in tokens:
        if gen_table(token).is_lep:
            ratios.append((str(token), lep_expansion(token).word_length))
    return ratios
