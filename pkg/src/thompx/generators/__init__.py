"""Generator catalog and generator-word evaluation"""

from thompx.generators.catalog import (
    G21_GENERATORS,
    LEP_GENERATORS,
    LP_GENERATORS,
    MONOID_GENERATORS,
    MONOTONE_GENERATORS,
    GeneratorRegistry,
    Token,
    action_of,
    adjacent_taus,
    gen,
    gen_table,
    inverse_token,
    is_invertible,
    tau,
    with_taus,
)
from thompx.generators.words import (
    GeneratorWord,
    apply_word,
    as_word,
    concat,
    eval_word,
    move_letter,
    parse_token,
    parse_word,
    permutation_word,
    tau0_expand,
    tau_adjacent_factorization,
    word_inverse,
)

__all__ = [
    "G21_GENERATORS",
    "LEP_GENERATORS",
    "LP_GENERATORS",
    "MONOID_GENERATORS",
    "MONOTONE_GENERATORS",
    "GeneratorRegistry",
    "GeneratorWord",
    "Token",
    "action_of",
    "adjacent_taus",
    "apply_word",
    "as_word",
    "concat",
    "eval_word",
    "gen",
    "gen_table",
    "inverse_token",
    "is_invertible",
    "move_letter",
    "parse_token",
    "parse_word",
    "permutation_word",
    "tau",
    "tau0_expand",
    "tau_adjacent_factorization",
    "with_taus",
    "word_inverse",
]
