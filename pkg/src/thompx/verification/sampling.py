"""
Random Samples

Seeded generators for the property suites. Every helper takes a numpy
``Generator`` so a suite run is reproduced exactly by its seed.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from thompx.circuits.netlist import ARITY, Circuit, CircuitBuilder, GateKind
from thompx.circuits.reversible import ReversibleBuilder
from thompx.codes.prefix_codes import PrefixCode
from thompx.codes.words import Word, alphabet
from thompx.generators.catalog import (
    G21_GENERATORS,
    LEP_GENERATORS,
    LP_GENERATORS,
    Token,
    adjacent_taus,
)
from thompx.generators.words import GeneratorWord, eval_word
from thompx.thompson.element import ThompsonElement, reduce
from thompx.thompson.table import MorphismTable

LOGIC_GATES = (GateKind.AND, GateKind.OR, GateKind.NOT, GateKind.FORK)


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_word(rng: np.random.Generator, max_length: int, k: int = 2) -> Word:
    length = int(rng.integers(0, max_length + 1))
    letters = alphabet(k)
    return "".join(letters[int(i)] for i in rng.integers(0, k, size=length))


def random_bits(rng: np.random.Generator, length: int) -> Word:
    return "".join(str(int(b)) for b in rng.integers(0, 2, size=length))


def random_maximal_code(
    rng: np.random.Generator, max_length: int, splits: int, k: int = 2
) -> PrefixCode:
    """Split random leaves of the k-ary tree, starting from {ε}"""
    leaves: List[Word] = [""]
    for _ in range(splits):
        candidates = [w for w in leaves if len(w) < max_length]
        if not candidates:
            break
        leaf = candidates[int(rng.integers(len(candidates)))]
        leaves.remove(leaf)
        leaves.extend(leaf + a for a in alphabet(k))
    return PrefixCode.of(leaves, k)


def random_code(
    rng: np.random.Generator, max_size: int, max_length: int, k: int = 2
) -> PrefixCode:
    """A prefix code, maximal or not, with at most max_size members"""
    members: List[Word] = []
    for _ in range(max_size * 3):
        if len(members) >= max_size:
            break
        word = random_word(rng, max_length, k)
        if any(w.startswith(word) or word.startswith(w) for w in members):
            continue
        members.append(word)
    return PrefixCode.of(members, k)


def random_table(
    rng: np.random.Generator, max_length: int, splits: int = 3, k: int = 2
) -> MorphismTable:
    """Total table on a random maximal code with arbitrary images"""
    code = random_maximal_code(rng, max_length, splits, k)
    return MorphismTable.of({p: random_word(rng, max_length, k) for p in code}, k)


def random_group_element(
    rng: np.random.Generator, max_length: int, splits: int = 3, k: int = 2
) -> ThompsonElement:
    """Bijection between two random maximal codes of equal size"""
    domain = random_maximal_code(rng, max_length, splits, k)
    image = random_maximal_code(rng, max_length, splits, k)
    for _ in range(50):
        if len(image) == len(domain):
            break
        image = random_maximal_code(rng, max_length, splits, k)
    else:
        image = domain
    targets = [image.words[int(i)] for i in rng.permutation(len(image))]
    return reduce(dict(zip(domain.words, targets)), k)


def random_tokens(
    rng: np.random.Generator, pool: Sequence[Token], max_length: int
) -> GeneratorWord:
    length = int(rng.integers(0, max_length + 1))
    return GeneratorWord(tuple(pool[int(i)] for i in rng.integers(0, len(pool), size=length)))


def random_circuit(
    rng: np.random.Generator,
    m: int,
    gates: int,
    n: Optional[int] = None,
    kinds: Sequence[GateKind] = LOGIC_GATES,
) -> Circuit:
    """
    Random circuit in which every input is consumed

    Gates take an unused input first while any remain; outputs are
    distinct wires. Wires may be read more than once. The default gate
    kinds give a desugared circuit.
    """
    builder = CircuitBuilder(m)
    wires = list(builder.inputs)
    unused = list(builder.inputs)
    for _ in range(gates):
        kind = kinds[int(rng.integers(len(kinds)))]
        arity = ARITY[kind][0]
        if arity > len(wires):
            kind, arity = GateKind.NOT, 1
        first = unused.pop(0) if unused else wires[int(rng.integers(len(wires)))]
        others = [w for w in wires if w != first]
        picks = rng.choice(len(others), size=arity - 1, replace=False) if arity > 1 else []
        operands = [first] + [others[int(i)] for i in picks]
        for w in operands:
            if w in unused:
                unused.remove(w)
        wires.extend(builder.add(kind, *operands))
    if n is None:
        n = int(rng.integers(1, min(len(wires), m + 1) + 1))
    chosen = rng.choice(len(wires), size=min(n, len(wires)), replace=False)
    return builder.build([wires[int(i)] for i in chosen], name="random")


def random_reversible_circuit(rng: np.random.Generator, m: int, gates: int) -> Circuit:
    """Circuit over NOT, CNOT, CCNOT and SWAP on m lines"""
    builder = ReversibleBuilder(m)
    for _ in range(gates):
        lines = [int(p) + 1 for p in rng.permutation(m)]
        choice = int(rng.integers(4))
        if choice == 0 or m == 1:
            builder.not_(lines[0])
        elif choice == 1:
            builder.cnot(lines[0], lines[1])
        elif choice == 2 and m >= 3:
            builder.ccnot(lines[0], lines[1], lines[2])
        else:
            builder.swap(lines[0], lines[1])
    return builder.build(name="random_reversible")


def reversible_sample(
    rng: np.random.Generator, count: int = 50, max_lines: int = 4, max_gates: int = 5
) -> List[Circuit]:
    """The reversible circuits shared by the pair, embedding and Schreier checks"""
    return [
        random_reversible_circuit(
            rng, int(rng.integers(1, max_lines + 1)), int(rng.integers(0, max_gates + 1))
        )
        for _ in range(count)
    ]


def random_lep_word(
    rng: np.random.Generator, max_length: int, width: int = 3, attempts: int = 200
) -> Tuple[GeneratorWord, ThompsonElement]:
    """
    Mixed catalog word whose value is a nonempty lep element

    Words over the lep basis, the lp generators, the φ generators and
    transpositions are drawn until one evaluates to a lep element.

    Raises:
        RuntimeError: if no attempt succeeds
    """
    pool = list(LEP_GENERATORS) + list(LP_GENERATORS) + list(G21_GENERATORS[2:5])
    pool += list(adjacent_taus(width))
    for _ in range(attempts):
        word = random_tokens(rng, pool, max_length)
        if not len(word):
            continue
        element = eval_word(word)
        if element.is_lep:
            return word, element
    raise RuntimeError(f"no lep-valued word found in {attempts} attempts")
