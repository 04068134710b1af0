"""Seeded property suites and the random samplers behind them"""

from thompx.verification.sampling import (
    make_rng,
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
from thompx.verification.suites import (
    SUITE_NAMES,
    SUITES,
    CheckStatus,
    PropertyResult,
    SuiteReport,
    SuiteRunner,
    run_suite,
)

__all__ = [
    "CheckStatus",
    "PropertyResult",
    "SUITES",
    "SUITE_NAMES",
    "SuiteReport",
    "SuiteRunner",
    "make_rng",
    "random_bits",
    "random_circuit",
    "random_code",
    "random_group_element",
    "random_lep_word",
    "random_maximal_code",
    "random_reversible_circuit",
    "random_table",
    "random_tokens",
    "random_word",
    "reversible_sample",
    "run_suite",
]
