"""
Property Suites

Seeded property checks grouped by package. Each property draws from its
own generator (seeded from the suite seed and the property's position),
so one property can be rerun alone and reproduce exactly.

A property returns (checked, failing samples, measured details); the
runner turns that into a PropertyResult the way a health monitor turns a
component check into a health status.
"""

import math
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations, product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from loguru import logger

from thompx.circuits.netlist import GateKind, gate_function
from thompx.circuits.reversible import (
    fredkin_perm,
    invert_reversible,
    pad_circuit,
    toffoli_repr,
)
from thompx.circuits.transforms import (
    added_id_count,
    desugar,
    explicit_form,
    layerize,
    normalize_fanout,
)
from thompx.circuits.truth_table import TruthTable, pad_permutation, truth_table_of
from thompx.codes.prefix_codes import ideal_intersection, is_essential_bruteforce
from thompx.codes.words import all_words
from thompx.compiler.group_words import (
    check_embedding_relation,
    check_pair_contract,
    check_stab01,
    check_wf_contract,
    compile_pair,
    compile_wf,
)
from thompx.compiler.lep import circuit_to_lep_word, lep_word_to_circuit
from thompx.compiler.normalize import lep_normalize
from thompx.core.config import get_config
from thompx.core.errors import CompileError, ErrorCode, ThompxError
from thompx.generators.catalog import (
    G21_GENERATORS,
    MONOID_GENERATORS,
    adjacent_taus,
    gen_table,
    tau,
    with_taus,
)
from thompx.generators.words import (
    apply_word,
    eval_word,
    tau0_expand,
    tau_adjacent_factorization,
    word_inverse,
)
from thompx.metrics.asymmetry import alpha_profile, inverse_size_mismatches, permutation_sizes
from thompx.metrics.cayley import (
    cayley_ball,
    inverse_symmetry_violations,
    monotone_wordlength,
)
from thompx.metrics.profiles import distortion_of, parse_dump
from thompx.metrics.schreier import (
    default_schreier_generators,
    schreier_ball,
    schreier_D,
    unresolved_elements,
)
from thompx.metrics.search import DEFAULT_BASIS, min_circuit_size
from thompx.thompson.chains import direct_composable_chain
from thompx.thompson.element import compose, identity_element, invert, reduce
from thompx.thompson.embeddings import embed0, embed1, embed_pair
from thompx.thompson.table import image_code_of, preimage_code, reduce_mapping, restrict_to
from thompx.verification.sampling import (
    LOGIC_GATES,
    random_bits,
    random_circuit,
    random_code,
    random_group_element,
    random_lep_word,
    random_maximal_code,
    random_reversible_circuit,
    random_table,
    random_tokens,
    random_word,
    reversible_sample,
)

Outcome = Tuple[int, List[Any], Dict[str, Any]]
PropertyCheck = Callable[[np.random.Generator, int], Outcome]


class CheckStatus(Enum):
    """Property check status"""

    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"


@dataclass
class PropertyResult:
    """Result of one property check"""

    name: str
    status: CheckStatus
    checked: int
    failures: List[Any] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    message: Optional[str] = None
    elapsed: float = 0.0


def format_details(details: Dict[str, Any]) -> str:
    """Measured constants as 'key=value' pairs; floats keep 4 significant digits"""
    parts = []
    for key, value in details.items():
        text = f"{value:.4g}" if isinstance(value, float) else str(value)
        parts.append(f"{key}={text}")
    return "; ".join(parts)


@dataclass
class SuiteReport:
    """All property results of one suite run"""

    suite: str
    seed: int
    results: List[PropertyResult]

    @property
    def passed(self) -> bool:
        return all(r.status is CheckStatus.PASSED for r in self.results)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "property": r.name,
                    "status": r.status.value,
                    "checked": r.checked,
                    "failures": len(r.failures),
                    "seconds": round(r.elapsed, 3),
                    "details": format_details(r.details),
                }
                for r in self.results
            ]
        )


# ============================================================================
# REGISTRY
# ============================================================================

SUITES: Dict[str, List[Tuple[str, PropertyCheck, Optional[int]]]] = {}

# properties on this stream draw the same reversible circuits first
PAIR_STREAM = 1000


def prop(suite: str, name: str, stream: Optional[int] = None):
    """
    Decorator registering a property check under a suite

    A property's generator is seeded from the suite seed and its stream,
    which defaults to its position in the suite. Properties registered on
    one stream start from identical generators and so share samples.
    """

    def decorator(check: PropertyCheck) -> PropertyCheck:
        SUITES.setdefault(suite, []).append((name, check, stream))
        return check

    return decorator


def _map(fn: Callable, items: Sequence[Any], jobs: int) -> List[Any]:
    if jobs == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with Parallel(n_jobs=jobs) as parallel:
        return list(parallel(delayed(fn)(item) for item in items))


# ============================================================================
# CODES
# ============================================================================


@prop("codes", "intersection_within_union")
def _intersection_within_union(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    for _ in range(300):
        p, q = random_code(rng, 6, 5), random_code(rng, 6, 5)
        if not set(ideal_intersection(p, q)) <= set(p) | set(q):
            failures.append((p.words, q.words))
    return 300, failures, {}


@prop("codes", "intersection_commutes")
def _intersection_commutes(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    for _ in range(300):
        p, q = random_code(rng, 6, 5), random_code(rng, 6, 5)
        if ideal_intersection(p, q) != ideal_intersection(q, p):
            failures.append((p.words, q.words))
    return 300, failures, {}


@prop("codes", "maximal_code_unique_prefix")
def _unique_prefix(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    checked = 0
    for _ in range(100):
        code = random_maximal_code(rng, 5, int(rng.integers(0, 9)))
        for _ in range(20):
            length = code.max_length + int(rng.integers(0, 4))
            word = random_bits(rng, length)
            hits = sum(1 for p in code if word.startswith(p))
            checked += 1
            if hits != 1:
                failures.append((code.words, word))
    return checked, failures, {}


@prop("codes", "kraft_matches_enumeration")
def _kraft_matches(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    for trial in range(300):
        if trial % 2:
            code = random_code(rng, 6, 5)
        else:
            code = random_maximal_code(rng, 5, int(rng.integers(0, 6)))
        if code.is_maximal != is_essential_bruteforce(code):
            failures.append(code.words)
    return 300, failures, {}


# ============================================================================
# THOMPSON
# ============================================================================


@prop("thompson", "reduce_idempotent")
def _reduce_idempotent(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    for _ in range(1000):
        element = reduce(random_table(rng, 4, int(rng.integers(0, 10))))
        if reduce(element.table) != element:
            failures.append(element)
    return 1000, failures, {}


@prop("thompson", "reduce_confluent")
def _reduce_confluent(rng: np.random.Generator, jobs: int) -> Outcome:
    """Reducing any restriction, in any merge order, gives the same canonical table"""
    failures = []
    for _ in range(1000):
        table = random_table(rng, 4, int(rng.integers(0, 8)))
        refinement = []
        for key in table.keys:
            if rng.random() < 0.5:
                refinement.extend(key + a + b for a in "01" for b in "01")
            else:
                refinement.append(key)
        canonical = reduce(table)
        restricted = restrict_to(table, refinement)
        if reduce(restricted) != canonical:
            failures.append(("restriction", table))
        shuffled = reduce_mapping(restricted.mapping, order=rng)
        if shuffled != dict(canonical.table.mapping):
            failures.append(("merge_order", table))
    return 1000, failures, {}


@prop("thompson", "reduce_preserves_semantics")
def _reduce_semantics(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    checked = 0
    for _ in range(200):
        table = random_table(rng, 4, int(rng.integers(0, 8)))
        element = reduce(table)
        for _ in range(30):
            word = random_word(rng, table.length() + 3)
            before = table.apply(word)
            checked += 1
            if before is not None and element.apply(word) != before:
                failures.append((table, word))
    return checked, failures, {}


@prop("thompson", "compose_associative")
def _compose_associative(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    for _ in range(1000):
        a, b, c = (reduce(random_table(rng, 4, int(rng.integers(0, 6)))) for _ in range(3))
        if compose(a, compose(b, c)) != compose(compose(a, b), c):
            failures.append((a, b, c))
    return 1000, failures, {}


@prop("thompson", "group_laws_on_ball")
def _group_laws(rng: np.random.Generator, jobs: int) -> Outcome:
    ball = cayley_ball(with_taus(G21_GENERATORS, 3), 5, jobs=jobs)
    identity = identity_element()
    failures = []
    checked = 0
    for g in ball:
        if g.in_fix0 and g.in_fix1 and g != identity:
            failures.append(("fix0_and_fix1", g))
        if not g.in_g:
            continue
        checked += 1
        inverse = invert(g)
        if compose(g, inverse) != identity or invert(inverse) != g:
            failures.append(("inverse", g))
    return checked, failures, {"ball_size": len(ball)}


@prop("thompson", "embeddings_are_homomorphisms")
def _embeddings(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    for _ in range(100):
        a = random_group_element(rng, 3, int(rng.integers(0, 5)))
        b = random_group_element(rng, 3, int(rng.integers(0, 5)))
        if embed0(compose(a, b)) != compose(embed0(a), embed0(b)):
            failures.append(("embed0", a, b))
        if not embed0(a).in_fix1 or not embed1(a).in_fix0:
            failures.append(("fix", a))
        if not embed_pair(a, b).in_stab01:
            failures.append(("stab01", a, b))
    return 100, failures, {}


@prop("thompson", "direct_composable_chains")
def _chains(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    checked = skipped = 0
    for _ in range(200):
        tables = [random_table(rng, 3, int(rng.integers(0, 4))) for _ in range(rng.integers(1, 6))]
        try:
            chain = direct_composable_chain(tables)
        except ThompxError as exc:
            if exc.code is not ErrorCode.EMPTY_COMPOSITE:
                raise
            skipped += 1
            continue
        checked += 1
        for left, right in zip(chain, chain[1:]):
            if left.image_code() != right.domain_code():
                failures.append(("codes", tables))
        before = after = None
        for original, factor in zip(tables, chain):
            before = reduce(original) if before is None else compose(reduce(original), before)
            after = reduce(factor) if after is None else compose(reduce(factor), after)
        if before != after:
            failures.append(("composite", tables))
        bound = sum(t.length() for t in tables)
        if max(t.length() for t in chain) > bound:
            failures.append(("length", tables))
    return checked, failures, {"empty_composites": skipped}


@prop("thompson", "inverse_image_length_bounds")
def _inverse_image_bounds(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    for _ in range(300):
        table = random_table(rng, 3, int(rng.integers(0, 6)))
        code = random_code(rng, 4, 4)
        if not len(code):
            continue
        bound = table.length() + code.max_length
        if preimage_code(table, code).max_length > bound:
            failures.append(("preimage", table, code.words))
        if image_code_of(table, code).max_length > bound:
            failures.append(("image", table, code.words))
    return 300, failures, {}


# ============================================================================
# GENERATORS
# ============================================================================


@prop("generators", "tau_adjacent_factorization")
def _tau_factorization(rng: np.random.Generator, jobs: int) -> Outcome:
    pairs = [(i, j) for j in range(2, 7) for i in range(1, j)]
    failures = [p for p in pairs if eval_word(tau_adjacent_factorization(*p)) != gen_table(tau(*p))]
    return len(pairs), failures, {}


@prop("generators", "tau0_expansion")
def _tau0(rng: np.random.Generator, jobs: int) -> Outcome:
    pairs = [(i, j) for j in range(2, 7) for i in range(1, j)]
    failures = [p for p in pairs if eval_word(tau0_expand(*p)) != embed0(gen_table(tau(*p)))]
    return len(pairs), failures, {}


@prop("generators", "word_inverse")
def _word_inverse(rng: np.random.Generator, jobs: int) -> Outcome:
    pool = list(G21_GENERATORS[:5]) + [tau(1, 2), tau(2, 3)]
    failures = []
    for _ in range(200):
        word = random_tokens(rng, pool, 6)
        if eval_word(word_inverse(word)) != invert(eval_word(word)):
            failures.append(str(word))
    return 200, failures, {}


@prop("generators", "apply_word_matches_evaluation")
def _apply_word(rng: np.random.Generator, jobs: int) -> Outcome:
    pool = list(MONOID_GENERATORS) + list(adjacent_taus(4))
    failures = []
    for _ in range(300):
        word = random_tokens(rng, pool, 5)
        x = random_word(rng, 10)
        lazy = apply_word(word, x)
        if lazy is not None and lazy != eval_word(word).apply(x):
            failures.append((str(word), x))
    return 300, failures, {}


@prop("generators", "catalog_tables")
def _catalog(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    if gen_table("N") != gen_table("phi_not"):
        failures.append("N")
    if gen_table("C") != reduce({"0": "0", "10": "11", "11": "10"}):
        failures.append("C")
    toffoli = gen_table("T")
    for x in all_words(2, 3):
        a, b, c = (int(bit) for bit in x)
        if toffoli.apply(x) != f"{a}{b}{c ^ (a & b)}":
            failures.append(("T", x))
    return 10, failures, {}


# ============================================================================
# CIRCUITS
# ============================================================================

_SUGARED = LOGIC_GATES + (GateKind.XOR, GateKind.CNOT, GateKind.CCNOT)


@prop("circuits", "desugar_and_layerize_preserve_function")
def _transforms(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    ratios = []
    for _ in range(100):
        m = int(rng.integers(1, 6))
        circuit = random_circuit(rng, m, int(rng.integers(0, 15)), kinds=_SUGARED)
        table = truth_table_of(circuit)
        layered = layerize(circuit)
        if truth_table_of(desugar(circuit)) != table or truth_table_of(layered) != table:
            failures.append(circuit.to_text())
        source = normalize_fanout(desugar(circuit))
        added = added_id_count(circuit, layered)
        ratios.append(added / max(1, source.size) ** 2)
        if added > source.size**2:
            failures.append(("id_bound", circuit.to_text()))
    return 100, failures, {"max_id_ratio": max(ratios)}


@prop("circuits", "gate_semantics")
def _gate_semantics(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    for a, b, c in product((0, 1), repeat=3):
        if gate_function(GateKind.CNOT, (a, b)) != (a, a ^ b):
            failures.append(("CNOT", a, b))
        if gate_function(GateKind.CCNOT, (a, b, c)) != (a, b, (a & b) ^ c):
            failures.append(("CCNOT", a, b, c))
    return 8, failures, {}


@prop("circuits", "toffoli_representation")
def _toffoli(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    tables = [TruthTable.from_ints(2, 2, values) for values in product(range(4), repeat=4)]
    for table in tables:
        full = truth_table_of(toffoli_repr(table))
        if not full.is_bijective:
            failures.append(("bijective", table.as_ints))
        elif any(full(x + "00") != y + x for x, y in table):
            failures.append(("contract", table.as_ints))
    return len(tables), failures, {}


def _fredkin_failures(batch: Sequence[Tuple[int, ...]]) -> List[Any]:
    failures = []
    for images in batch:
        m = (len(images) - 1).bit_length()
        table = TruthTable.from_ints(m, m, images)
        circuit = fredkin_perm(table, 1)
        for x, y in table:
            flipped = "".join("1" if bit == "0" else "0" for bit in y)
            if circuit.evaluate(x + "1" * m + "0" * (m + 1)) != y + flipped + x + "0":
                failures.append((images, x))
    return failures


@prop("circuits", "fredkin_permutation")
def _fredkin(rng: np.random.Generator, jobs: int) -> Outcome:
    """Every permutation of {0,1}^m for m <= 3"""
    perms = [p for m in (1, 2, 3) for p in permutations(range(1 << m))]
    batches = [perms[i:i + 2000] for i in range(0, len(perms), 2000)]
    failures = [f for part in _map(_fredkin_failures, batches, jobs) for f in part]
    return len(perms), failures, {}


@prop("circuits", "padded_permutation_size")
def _padding(rng: np.random.Generator, jobs: int) -> Outcome:
    failures = []
    for _ in range(30):
        m = int(rng.integers(1, 4))
        circuit = random_reversible_circuit(rng, m, int(rng.integers(0, 4)))
        table = truth_table_of(circuit)
        width = circuit.size
        padded = pad_circuit(circuit, width)
        if padded.size > 3 * circuit.size:
            failures.append(("size", circuit.to_text()))
        check_width = min(width, 8)
        if truth_table_of(pad_circuit(circuit, check_width)) != pad_permutation(table, check_width):
            failures.append(("function", circuit.to_text()))
    return 30, failures, {}


# ============================================================================
# COMPILER
# ============================================================================


def _lep_roundtrip_case(circuit) -> Tuple[bool, float, float]:
    report = circuit_to_lep_word(circuit)
    rebuilt = lep_word_to_circuit(report.word, circuit.input_count)
    same = truth_table_of(rebuilt) == truth_table_of(circuit)
    length = max(1, report.word_length)
    return same, report.word_length / circuit.size, rebuilt.size / length


def _wf_case(circuit) -> Tuple[List[str], int, int, int]:
    explicit = explicit_form(circuit)
    try:
        report = compile_wf(explicit)
    except CompileError as exc:
        if exc.code is not ErrorCode.TAU_BOUND_EXCEEDED:
            raise
        return [exc.message], 0, 0, explicit.size
    return check_wf_contract(report, circuit), report.max_tau, report.word_length, explicit.size


def _pair_case(circuit) -> Tuple[List[str], List[str], int]:
    report = compile_pair(circuit, invert_reversible(circuit))
    return (
        check_pair_contract(report, circuit),
        check_embedding_relation(report, circuit),
        report.word_length,
    )


def _pair_cones_case(case) -> Tuple[List[Tuple[str, str]], int]:
    circuit, tails = case
    report = compile_pair(circuit, invert_reversible(circuit))
    return check_stab01(report, circuit.input_count, tails), report.max_tau


def _normalize_case(word) -> Tuple[bool, int, int]:
    report = lep_normalize(word)
    return eval_word(report.word) == eval_word(word), len(word), report.word_length


@prop("compiler", "lep_round_trip")
def _lep_round_trip(rng: np.random.Generator, jobs: int) -> Outcome:
    circuits = []
    for _ in range(300):
        m = int(rng.integers(1, 6))
        circuits.append(random_circuit(rng, m, int(rng.integers(0, 25 - 2 * m))))
    results = _map(_lep_roundtrip_case, circuits, jobs)
    failures = [c.to_text() for c, (same, _, _) in zip(circuits, results) if not same]
    details = {
        "max_word_over_size": max(r[1] for r in results),
        "max_size_over_word": max(r[2] for r in results),
    }
    return len(circuits), failures, details


@prop("compiler", "wf_contract")
def _wf_contract(rng: np.random.Generator, jobs: int) -> Outcome:
    """Circuits are compiled in explicit form and sized by it"""
    circuits = []
    for _ in range(200):
        m = int(rng.integers(1, 6))
        circuits.append(random_circuit(rng, m, int(rng.integers(1, 25 - 2 * m))))
    results = _map(_wf_case, circuits, jobs)
    failures = []
    constant = 0.0
    for circuit, (bad, max_tau, length, size) in zip(circuits, results):
        if bad:
            failures.append(("contract", circuit.to_text(), bad[:4]))
        if max_tau > size**2 + 2:
            failures.append(("max_tau", circuit.to_text(), max_tau))
        constant = max(constant, length / size**4)
    return len(circuits), failures, {"max_length_over_size4": constant}


@prop("compiler", "pair_contract", stream=PAIR_STREAM)
def _pair_contract(rng: np.random.Generator, jobs: int) -> Outcome:
    """0x -> 0 g(x) both ways, and W (g)_0^-1 in Fix(0)"""
    circuits = reversible_sample(rng)
    results = _map(_pair_case, circuits, jobs)
    failures = []
    for circuit, (bad, moved, _) in zip(circuits, results):
        if bad:
            failures.append(("contract", circuit.to_text()))
        if moved:
            failures.append(("fix0", circuit.to_text()))
    return len(circuits), failures, {"max_word_length": max(r[2] for r in results)}


@prop("compiler", "pair_element_laws", stream=PAIR_STREAM)
def _pair_element(rng: np.random.Generator, jobs: int) -> Outcome:
    """Stab(0,1) and W W^-1 = 1, by application on both cones"""
    circuits = reversible_sample(rng)
    cases = [(c, [random_bits(rng, 32) for _ in range(8)]) for c in circuits]
    results = _map(_pair_cones_case, cases, jobs)
    failures = [
        (circuit.to_text(), bad[:4]) for circuit, (bad, _) in zip(circuits, results) if bad
    ]
    return len(circuits), failures, {"max_tau": max(r[1] for r in results)}


@prop("compiler", "lep_normalize_semantics")
def _lep_normalize(rng: np.random.Generator, jobs: int) -> Outcome:
    words = [random_lep_word(rng, 10)[0] for _ in range(100)]
    results = _map(_normalize_case, words, jobs)
    failures = [str(w) for w, (same, _, _) in zip(words, results) if not same]
    constant = max(out / length**2 for _, length, out in results)
    return len(words), failures, {"max_length_over_input2": constant}


# ============================================================================
# METRICS
# ============================================================================


@prop("metrics", "ball_parents_and_dump")
def _ball_structure(rng: np.random.Generator, jobs: int) -> Outcome:
    ball = cayley_ball(with_taus(G21_GENERATORS, 3), 3, jobs=jobs)
    failures = []
    for node, step in ball.parents.items():
        if step is not None and ball[node] != ball[step[0]] + 1:
            failures.append(("triangle", node))
    rows = parse_dump(ball.dump())
    if [element for _, element in rows] != list(ball) or [d for d, _ in rows] != list(
        ball.distances.values()
    ):
        failures.append(("dump", len(rows)))
    return len(ball), failures, {}


@prop("metrics", "cayley_inverse_symmetry")
def _symmetry(rng: np.random.Generator, jobs: int) -> Outcome:
    gens = ["phi_not", "sigma", "tau(1,2)"]
    ball = cayley_ball(gens, 4, jobs=jobs)
    failures = inverse_symmetry_violations(ball, gens)
    return len(ball), failures, {}


@prop("metrics", "basis_growth_never_hurts")
def _basis_growth(rng: np.random.Generator, jobs: int) -> Outcome:
    cap = get_config().search.circuit_cap
    bigger = DEFAULT_BASIS | {GateKind.XOR}
    failures = []
    for images in permutations(range(4)):
        table = TruthTable.from_ints(2, 2, images)
        small = min_circuit_size(table, DEFAULT_BASIS, cap, jobs=jobs)
        large = min_circuit_size(table, bigger, cap, jobs=jobs)
        if (small if small is not None else math.inf) < (large if large is not None else math.inf):
            failures.append(images)
    return 24, failures, {}


@prop("metrics", "alpha_consistency")
def _alpha(rng: np.random.Generator, jobs: int) -> Outcome:
    cap = get_config().search.circuit_cap
    profile = alpha_profile(2, cap, jobs=jobs)
    rows = permutation_sizes(1, cap) + permutation_sizes(2, cap)
    failures: List[Any] = []
    for s in range(cap + 1):
        direct = max((r.inverse_size for r in rows if r.size <= s), default=0)
        if profile(s) != direct:
            failures.append(("alpha", s))
    failures.extend(("inverse", t.as_ints) for t in inverse_size_mismatches(2, cap))
    return len(rows), failures, {"alpha": list(profile.values)}


@prop("metrics", "distortion_composition")
def _distortion(rng: np.random.Generator, jobs: int) -> Outcome:
    """
    delta[l1,l3](n) <= delta[l1,l2](delta[l2,l3](n)) on Cayley balls

    l1, l2 and l3 are word lengths over growing generator sets; the domain
    is every element resolved in all three balls.
    """
    small = ["sigma", "phi_not"]
    middle = small + ["tau(1,2)"]
    large = middle + ["phi_or", "inv(sigma)"]
    b1, b2, b3 = (cayley_ball(gens, 5, jobs=jobs) for gens in (small, middle, large))
    domain = [g for g in b1 if g in b2 and g in b3]
    d13 = distortion_of(b1.distances, b3.distances, domain)
    d12 = distortion_of(b1.distances, b2.distances, domain)
    d23 = distortion_of(b2.distances, b3.distances, domain)
    failures = [
        (n, d13(n), d12(d23(n))) for n in range(d13.max_n + 1) if d13(n) > d12(d23(n))
    ]
    details = {"domain": len(domain), "unresolved": len(b1) - len(domain)}
    return d13.max_n + 1, failures, details


@prop("metrics", "schreier_upper_bound", stream=PAIR_STREAM)
def _schreier(rng: np.random.Generator, jobs: int) -> Outcome:
    """
    D(1, g) <= |W| for the compiled pair of every resolved g

    The ball grows up to max_radius or until the suite node budget is
    spent; g whose coset lies beyond it are counted, not failed.
    """
    search = get_config().search
    ball = schreier_ball(
        default_schreier_generators(3),
        search.max_radius,
        frontier_limit=search.suite_frontier_limit,
        jobs=jobs,
        stop_at_limit=True,
    )
    circuits = reversible_sample(rng)
    elements = [reduce(dict(iter(truth_table_of(c)))) for c in circuits]
    unresolved = unresolved_elements(elements, ball)
    failures = []
    ratio = 0.0
    for circuit, element in zip(circuits, elements):
        distance = schreier_D(element, ball)
        if distance is None:
            continue
        length = compile_pair(circuit, invert_reversible(circuit)).word_length
        if distance > length:
            failures.append((circuit.to_text(), distance, length))
        ratio = max(ratio, distance / max(1, length))
    details = {
        "radius": ball.radius,
        "cosets": len(ball),
        "truncated": ball.truncated,
        "unresolved": len(unresolved),
        "max_distance_over_length": ratio,
    }
    return len(circuits) - len(unresolved), failures, details


@prop("metrics", "monotone_ball")
def _monotone(rng: np.random.Generator, jobs: int) -> Outcome:
    ball = monotone_wordlength(3, 3, jobs=jobs)
    failures = [g for g in ball if not g.is_monotone]
    if gen_table("phi_not") in ball:
        failures.append("phi_not")
    return len(ball), failures, {}


# ============================================================================
# RUNNER
# ============================================================================

SUITE_NAMES = ("codes", "thompson", "generators", "circuits", "compiler", "metrics")


class SuiteRunner:
    """
    Runs the properties of one suite

    Any exception raised by a property is recorded as an ERROR result
    instead of aborting the suite.
    """

    def __init__(self, suite: str, seed: int, jobs: int = 1) -> None:
        if suite not in SUITES:
            raise ThompxError(ErrorCode.MALFORMED_INPUT, f"unknown suite '{suite}'")
        self.suite = suite
        self.seed = seed
        self.jobs = jobs

    def check(self, stream: int, name: str, check: PropertyCheck) -> PropertyResult:
        rng = np.random.default_rng([self.seed, stream])
        started = time.perf_counter()
        try:
            checked, failures, details = check(rng, self.jobs)
            status = CheckStatus.FAILED if failures else CheckStatus.PASSED
            result = PropertyResult(name, status, checked, failures, details)
        except Exception as exc:  # noqa: BLE001
            result = PropertyResult(
                name, CheckStatus.ERROR, 0, message=f"{type(exc).__name__}: {exc}"
            )
        result.elapsed = time.perf_counter() - started
        log = logger.info if result.status is CheckStatus.PASSED else logger.warning
        log(
            "{}.{}: {} ({} checked, {} failures, {:.2f}s)",
            self.suite,
            name,
            result.status.value,
            result.checked,
            len(result.failures),
            result.elapsed,
        )
        return result

    def run(self, only: Optional[Sequence[str]] = None) -> SuiteReport:
        results = [
            self.check(index if stream is None else stream, name, check)
            for index, (name, check, stream) in enumerate(SUITES[self.suite])
            if only is None or name in only
        ]
        return SuiteReport(self.suite, self.seed, results)


def run_suite(
    name: str,
    seed: Optional[int] = None,
    jobs: Optional[int] = None,
    only: Optional[Sequence[str]] = None,
) -> SuiteReport:
    """
    Run a named suite

    Args:
        name: One of SUITE_NAMES
        seed: Defaults to the runtime config seed
        jobs: joblib workers; defaults to the runtime config
        only: Restrict to these property names

    Raises:
        ThompxError: MALFORMED_INPUT for an unknown suite
    """
    runtime = get_config().runtime
    seed = runtime.seed if seed is None else seed
    jobs = runtime.jobs if jobs is None else jobs
    report = SuiteRunner(name, seed, jobs).run(only)
    logger.info(
        "Suite {} (seed {}): {}", name, seed, "passed" if report.passed else "FAILED"
    )
    return report
