"""Circuit to word compilers"""

from thompx.compiler.group_words import (
    check_embedding_relation,
    check_pair_contract,
    check_stab01,
    check_wf_contract,
    compile_pair,
    compile_wf,
    gate_gadget,
    slice_word,
)
from thompx.compiler.lep import circuit_to_lep_word, lep_word_to_circuit, required_input_length
from thompx.compiler.normalize import (
    expansion_ratios,
    factor_circuit,
    lep_expansion,
    lep_normalize,
)
from thompx.compiler.report import CompileReport

__all__ = [
    "CompileReport",
    "check_embedding_relation",
    "check_pair_contract",
    "check_stab01",
    "check_wf_contract",
    "circuit_to_lep_word",
    "compile_pair",
    "compile_wf",
    "expansion_ratios",
    "factor_circuit",
    "gate_gadget",
    "lep_expansion",
    "lep_normalize",
    "lep_word_to_circuit",
    "required_input_length",
    "slice_word",
]
