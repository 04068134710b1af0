"""
Truth Tables

Total functions {0,1}^m -> {0,1}^n stored as 2^m output words in
lexicographic input order. Text format::

    truthtable m=1 n=1
    0 -> 1
    1 -> 0
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, List, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from thompx.codes.words import Word, all_words, int_to_word, word_to_int
from thompx.core.errors import CircuitError, ErrorCode
from thompx.circuits.netlist import Circuit

_HEADER_RE = re.compile(r"^truthtable\s+m=(\d+)\s+n=(\d+)$")
_ROW_RE = re.compile(r"^([01]*)\s*->\s*([01]*)$")


@dataclass(frozen=True)
class TruthTable:
    """
    Function table

    Attributes:
        m: Input length
        n: Output length
        outputs: f(x) for x in lexicographic order
    """

    m: int
    n: int
    outputs: Tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.outputs) != 2**self.m:
            raise CircuitError(
                ErrorCode.MALFORMED_INPUT,
                f"truth table on {self.m} inputs needs {2 ** self.m} rows, got {len(self.outputs)}",
            )
        for row in self.outputs:
            if len(row) != self.n or row.strip("01"):
                raise CircuitError(ErrorCode.MALFORMED_INPUT, f"bad output row {row!r}")

    @classmethod
    def of_function(cls, m: int, n: int, fn: Callable[[Word], Word]) -> "TruthTable":
        return cls(m, n, tuple(fn(x) for x in all_words(2, m)))

    @classmethod
    def from_ints(cls, m: int, n: int, values: Sequence[int]) -> "TruthTable":
        """Rows given as integers (MSB first)"""
        return cls(m, n, tuple(int_to_word(int(v), n) for v in values))

    @classmethod
    def identity(cls, m: int) -> "TruthTable":
        return cls(m, m, tuple(all_words(2, m)))

    def __call__(self, x: Word) -> Word:
        if len(x) != self.m:
            raise CircuitError(
                ErrorCode.LENGTH_MISMATCH, f"table has {self.m} inputs, got {len(x)} bits"
            )
        return self.outputs[word_to_int(x)]

    def __iter__(self):
        return iter(zip(all_words(2, self.m), self.outputs))

    @cached_property
    def as_ints(self) -> Tuple[int, ...]:
        return tuple(word_to_int(row) for row in self.outputs)

    @cached_property
    def columns(self) -> np.ndarray:
        """(2^m, n) uint8 array; column j is output bit j"""
        if self.n == 0:
            return np.zeros((2**self.m, 0), dtype=np.uint8)
        return np.array([[int(b) for b in row] for row in self.outputs], dtype=np.uint8)

    def column(self, j: int) -> np.ndarray:
        """Truth vector of output bit j (0-based)"""
        return self.columns[:, j]

    @property
    def is_bijective(self) -> bool:
        return self.m == self.n and len(set(self.outputs)) == len(self.outputs)

    def inverse(self) -> "TruthTable":
        """
        Inverse permutation

        Raises:
            CircuitError: NOT_BIJECTIVE
        """
        if not self.is_bijective:
            raise CircuitError(ErrorCode.NOT_BIJECTIVE, "truth table is not a permutation")
        rows: List[Word] = [""] * len(self.outputs)
        for x, y in self:
            rows[word_to_int(y)] = x
        return TruthTable(self.m, self.n, tuple(rows))

    def then(self, other: "TruthTable") -> "TruthTable":
        """Apply self, then other"""
        if other.m != self.n:
            raise CircuitError(ErrorCode.LENGTH_MISMATCH, "tables do not chain")
        return TruthTable(self.m, other.n, tuple(other(y) for y in self.outputs))

    def to_text(self) -> str:
        lines = [f"truthtable m={self.m} n={self.n}"]
        lines.extend(f"{x} -> {y}" for x, y in self)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TruthTable":
        return parse_truth_table(text)


def parse_truth_table(text: str) -> TruthTable:
    """
    Parse the truth-table text format

    Rows must appear in lexicographic input order.

    Raises:
        CircuitError: MALFORMED_INPUT
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    header = _HEADER_RE.match(lines[0]) if lines else None
    if not header:
        raise CircuitError(ErrorCode.MALFORMED_INPUT, "expected 'truthtable m=<m> n=<n>'")
    m, n = int(header.group(1)), int(header.group(2))
    rows: List[Word] = []
    for expected, line in zip(all_words(2, m), lines[1:]):
        match = _ROW_RE.match(line)
        if not match or match.group(1) != expected:
            raise CircuitError(
                ErrorCode.MALFORMED_INPUT, f"expected row for input {expected!r}, got {line!r}"
            )
        rows.append(match.group(2))
    if len(lines) - 1 != 2**m:
        raise CircuitError(
            ErrorCode.MALFORMED_INPUT, f"expected {2 ** m} rows, got {len(lines) - 1}"
        )
    return TruthTable(m, n, tuple(rows))


def _evaluate_chunk(circuit: Circuit, start: int, stop: int) -> List[Word]:
    m = circuit.input_count
    return [circuit.evaluate(int_to_word(v, m)) for v in range(start, stop)]


def truth_table_of(circuit: Circuit, jobs: int = 1) -> TruthTable:
    """
    Exhaustive evaluation over {0,1}^m

    With jobs > 1 the input range is split into contiguous chunks evaluated
    by joblib workers; chunks are merged in input order.
    """
    total = 2**circuit.input_count
    if jobs == 1 or total < 256:
        rows = _evaluate_chunk(circuit, 0, total)
    else:
        step = -(-total // (4 * abs(jobs)))
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with Parallel(n_jobs=jobs) as parallel:
            chunks = parallel(delayed(_evaluate_chunk)(circuit, lo, hi) for lo, hi in bounds)
        rows = [row for chunk in chunks for row in chunk]
    return TruthTable(circuit.input_count, circuit.output_count, tuple(rows))


def same_function(a: Circuit, b: Circuit) -> bool:
    """Exhaustive equality of input-output functions"""
    if (a.input_count, a.output_count) != (b.input_count, b.output_count):
        return False
    return truth_table_of(a) == truth_table_of(b)


def pad_permutation(table: TruthTable, size: int) -> TruthTable:
    """
    Extend a permutation of {0,1}^m to {0,1}^size fixing the trailing bits

    (x, w) -> (F(x), w) for |x| = m, |w| = size - m.

    Raises:
        CircuitError: BAD_SIZE if size < m, NOT_BIJECTIVE if F is not a
            permutation
    """
    if size < table.m:
        raise CircuitError(ErrorCode.BAD_SIZE, f"cannot pad {table.m} bits down to {size}")
    if not table.is_bijective:
        raise CircuitError(ErrorCode.NOT_BIJECTIVE, "only permutations can be padded")
    m = table.m
    return TruthTable.of_function(size, size, lambda z: table(z[:m]) + z[m:])
