"""
Generator Words

A GeneratorWord is a sequence of tokens in APPLICATION ORDER: the first
token acts first. This is the reverse of the algebraic notation
g_N ∘ ... ∘ g_1.

Word text format: whitespace-separated tokens, e.g.
``gamma_fork tau(1,3) sigma inv(sigma)``; lines starting with ``#`` are
comments.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from thompx.codes.words import Word
from thompx.core.errors import ErrorCode, GeneratorError
from thompx.generators.catalog import (
    Token,
    action_of,
    gen,
    inverse_token,
    is_invertible,
    tau,
    tau_or_none,
)
from thompx.thompson.element import ThompsonElement, compose, identity_element

_TAU_RE = re.compile(r"^tau\(\s*(\d+)\s*,\s*(\d+)\s*\)$")
_INV_RE = re.compile(r"^inv\((.*)\)$")

WordLike = Union["GeneratorWord", Sequence[Union[Token, str]], str]


@dataclass(frozen=True)
class GeneratorWord:
    """Immutable token sequence; first token applies first"""

    tokens: Tuple[Token, ...] = ()

    @classmethod
    def of(cls, tokens: Iterable[Optional[Token]]) -> "GeneratorWord":
        """Build a word, dropping None (degenerate transpositions)"""
        return cls(tuple(t for t in tokens if t is not None))

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return GeneratorWord(self.tokens[index])
        return self.tokens[index]

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.tokens + tuple(other))

    @property
    def max_tau(self) -> int:
        """Largest j over τ(i,j) tokens (0 if none)"""
        return max((t.j for t in self.tokens if t.is_tau), default=0)

    def to_text(self) -> str:
        return " ".join(str(t) for t in self.tokens) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GeneratorWord":
        return parse_word(text)

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.tokens)


def concat(words: Iterable[GeneratorWord]) -> GeneratorWord:
    tokens: List[Token] = []
    for word in words:
        tokens.extend(word)
    return GeneratorWord(tuple(tokens))


def parse_token(text: str) -> Optional[Token]:
    """
    Parse one token; degenerate τ(i,i) parses to None

    Raises:
        GeneratorError: UNKNOWN_GENERATOR, BAD_TAU_INDEX, NOT_INVERTIBLE_TOKEN
    """
    text = text.strip()
    inv = _INV_RE.match(text)
    if inv:
        inner = parse_token(inv.group(1))
        if inner is None:
            return None
        if not is_invertible(inner):
            raise GeneratorError(ErrorCode.NOT_INVERTIBLE_TOKEN, f"{inner} is not invertible")
        return inverse_token(inner)
    match = _TAU_RE.match(text)
    if match:
        i, j = int(match.group(1)), int(match.group(2))
        if i == j and i >= 1:
            return None
        return tau(i, j)
    if text.startswith("tau"):
        raise GeneratorError(ErrorCode.BAD_TAU_INDEX, f"malformed transposition {text!r}")
    return gen(text)


def parse_word(text: str) -> GeneratorWord:
    tokens: List[Optional[Token]] = []
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        tokens.extend(parse_token(part) for part in _split_tokens(line))
    return GeneratorWord.of(tokens)


def _split_tokens(line: str) -> List[str]:
    # tau(1, 3) may carry spaces inside the parentheses
    parts: List[str] = []
    depth = 0
    current = ""
    for char in line:
        if char.isspace() and depth == 0:
            if current:
                parts.append(current)
            current = ""
            continue
        depth += char == "("
        depth -= char == ")"
        current += char
    if current:
        parts.append(current)
    return parts


def format_word(word: GeneratorWord) -> str:
    return word.to_text()


def as_word(value: WordLike) -> GeneratorWord:
    """Accept a GeneratorWord, a token sequence or word text"""
    if isinstance(value, GeneratorWord):
        return value
    if isinstance(value, str):
        return parse_word(value)
    return GeneratorWord.of(parse_token(t) if isinstance(t, str) else t for t in value)


# ============================================================================
# EVALUATION
# ============================================================================


def eval_word(word: WordLike) -> ThompsonElement:
    """
    Fold compose over the tokens in application order

    The empty word evaluates to the identity {eps -> eps}.
    """
    current = identity_element(2)
    for token in as_word(word):
        current = compose(action_of(token), current)
    return current


def apply_word(word: WordLike, x: Word) -> Optional[Word]:
    """
    Apply the word to a single input, token by token

    Agrees with apply(eval_word(word), x) whenever that is defined; used for
    compiled words whose full tables are too large to build.
    """
    current: Optional[Word] = x
    for token in as_word(word):
        current = action_of(token).apply(current)
        if current is None:
            return None
    return current


def word_inverse(word: WordLike) -> GeneratorWord:
    """
    Free-group inverse: reversed, each token inverted

    Raises:
        GeneratorError: NOT_INVERTIBLE_TOKEN on a monoid-only generator
    """
    return GeneratorWord(tuple(inverse_token(t) for t in reversed(as_word(word).tokens)))


# ============================================================================
# TRANSPOSITION REWRITES
# ============================================================================


def tau_adjacent_factorization(i: int, j: int) -> GeneratorWord:
    """
    τ(i,j) as τ(i,i+1) ... τ(j-1,j) ... τ(i,i+1)

    Raises:
        GeneratorError: BAD_TAU_INDEX unless 1 <= i < j
    """
    tau(i, j)
    up = [tau(k, k + 1) for k in range(i, j)]
    return GeneratorWord(tuple(up + up[-2::-1]))


def tau0_expand(i: int, j: int) -> GeneratorWord:
    """
    (τ(i,j))_0 over tau12_0 and transpositions

    Conjugates tau12_0 by τ(2,i+1) and τ(3,j+1); degenerate conjugators
    are dropped.
    """
    tau(i, j)
    outer = tau_or_none(2, i + 1)
    inner = tau_or_none(3, j + 1)
    return GeneratorWord.of([outer, inner, Token("tau12_0"), inner, outer])


def move_letter(source: int, target: int) -> GeneratorWord:
    """
    Adjacent transpositions moving the letter at source to target

    The letters in between shift by one position towards source.
    """
    if source < target:
        return GeneratorWord(tuple(tau(k, k + 1) for k in range(source, target)))
    return GeneratorWord(tuple(tau(k - 1, k) for k in range(source, target, -1)))


def permutation_word(order: Sequence[int], offset: int = 0) -> GeneratorWord:
    """
    Adjacent transpositions rearranging a block

    ``order[k]`` is the current block index (0-based) of the letter that
    must end at block index k; the block starts after ``offset`` positions.
    """
    current = list(range(len(order)))
    tokens: List[Token] = []
    for target, wanted in enumerate(order):
        position = current.index(wanted)
        for k in range(position, target, -1):
            tokens.append(tau(offset + k, offset + k + 1))
            current[k - 1], current[k] = current[k], current[k - 1]
    return GeneratorWord(tuple(tokens))
