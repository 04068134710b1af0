"""Words, prefix codes and right-ideal operations"""

from thompx.codes.prefix_codes import (
    CodeClassification,
    PrefixCode,
    classify_code,
    ideal_intersection,
    is_essential_bruteforce,
    kraft_sum,
    minimal_elements,
    uniform_code,
)
from thompx.codes.words import (
    EPSILON_TEXT,
    Word,
    all_words,
    format_word,
    is_prefix,
    parse_word,
    validate_word,
)

__all__ = [
    "EPSILON_TEXT",
    "Word",
    "all_words",
    "format_word",
    "is_prefix",
    "parse_word",
    "validate_word",
    "CodeClassification",
    "PrefixCode",
    "classify_code",
    "ideal_intersection",
    "is_essential_bruteforce",
    "kraft_sum",
    "minimal_elements",
    "uniform_code",
]
