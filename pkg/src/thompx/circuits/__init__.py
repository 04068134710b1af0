"""Circuit IR, layering and reversible synthesis"""

from thompx.circuits.netlist import (
    ARITY,
    REVERSIBLE_KINDS,
    SUGAR_KINDS,
    Circuit,
    CircuitBuilder,
    Gate,
    GateKind,
    circuit_size,
    eval_circuit,
    format_netlist,
    gate_function,
    identity_circuit,
    input_wire,
    parse_netlist,
    single_gate,
)
from thompx.circuits.reversible import (
    ReversibleBuilder,
    build_sop,
    fredkin_perm,
    fredkin_repr,
    invert_reversible,
    mct,
    pad_circuit,
    pprm,
    synthesize_sop,
    toffoli_repr,
)
from thompx.circuits.transforms import (
    Slice,
    desugar,
    explicit_form,
    has_explicit_fanout,
    layerize,
    normalize_fanout,
    slice_circuit,
)
from thompx.circuits.truth_table import (
    TruthTable,
    pad_permutation,
    parse_truth_table,
    same_function,
    truth_table_of,
)

__all__ = [
    "ARITY",
    "REVERSIBLE_KINDS",
    "SUGAR_KINDS",
    "Circuit",
    "CircuitBuilder",
    "Gate",
    "GateKind",
    "ReversibleBuilder",
    "Slice",
    "TruthTable",
    "build_sop",
    "circuit_size",
    "desugar",
    "eval_circuit",
    "explicit_form",
    "format_netlist",
    "fredkin_perm",
    "fredkin_repr",
    "gate_function",
    "has_explicit_fanout",
    "identity_circuit",
    "input_wire",
    "invert_reversible",
    "layerize",
    "mct",
    "normalize_fanout",
    "pad_circuit",
    "pad_permutation",
    "parse_netlist",
    "parse_truth_table",
    "pprm",
    "same_function",
    "single_gate",
    "slice_circuit",
    "synthesize_sop",
    "toffoli_repr",
    "truth_table_of",
]
