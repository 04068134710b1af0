"""
Words over a digit alphabet

Words are plain ``str`` values whose letters are the digits ``0..k-1``.
The empty word is ``""`` in memory and ``eps`` in every text format.
"""

from itertools import product
from typing import Iterator

from thompx.core.errors import CodeError, ErrorCode

Word = str

EPSILON_TEXT = "eps"
ALPHABET_DIGITS = "0123456789"


def alphabet(k: int) -> str:
    """Letters of the k-letter alphabet, in order"""
    if not 2 <= k <= 10:
        raise CodeError(ErrorCode.BAD_ARITY, f"arity must be between 2 and 10, got {k}")
    return ALPHABET_DIGITS[:k]


def validate_word(word: Word, k: int = 2) -> Word:
    """
    Check that every letter is a digit below k

    Returns:
        The word itself

    Raises:
        CodeError: MALFORMED_INPUT on a foreign letter
    """
    letters = alphabet(k)
    for letter in word:
        if letter not in letters:
            raise CodeError(
                ErrorCode.MALFORMED_INPUT, f"letter {letter!r} outside alphabet of arity {k}"
            )
    return word


def parse_word(text: str, k: int = 2) -> Word:
    """Parse the text form of a word (``eps`` for the empty word)"""
    text = text.strip()
    if text == EPSILON_TEXT:
        return ""
    if not text:
        raise CodeError(ErrorCode.MALFORMED_INPUT, "empty token where a word was expected")
    return validate_word(text, k)


def format_word(word: Word) -> str:
    return word if word else EPSILON_TEXT


def is_prefix(u: Word, v: Word) -> bool:
    """True iff uz = v for some (possibly empty) z"""
    return v.startswith(u)


def is_proper_prefix(u: Word, v: Word) -> bool:
    return len(u) < len(v) and v.startswith(u)


def all_words(k: int, length: int) -> Iterator[Word]:
    """All words of exactly the given length, in lexicographic order"""
    for letters in product(alphabet(k), repeat=length):
        yield "".join(letters)


def word_to_int(word: Word) -> int:
    """Binary word read MSB-first; the empty word is 0"""
    return int(word, 2) if word else 0


def int_to_word(value: int, length: int) -> Word:
    return format(value, f"0{length}b") if length else ""
