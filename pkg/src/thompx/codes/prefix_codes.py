"""
Prefix Codes and Right Ideals

A finite prefix code P generates the right ideal P·A*. Intersections of
such ideals are again generated by prefix codes, and a code is maximal
exactly when its Kraft sum is 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional

from thompx.codes.words import (
    Word,
    all_words,
    format_word,
    parse_word,
    validate_word,
)
from thompx.core.errors import CodeError, ErrorCode


def _first_prefix_pair(words: Iterable[Word]) -> Optional[tuple]:
    """
    Find a pair (u, v) with u a proper prefix of v

    In lexicographic order a word is immediately followed by its extensions,
    so checking neighbours is enough.
    """
    ordered = sorted(set(words))
    for u, v in zip(ordered, ordered[1:]):
        if v.startswith(u):
            return u, v
    return None


def kraft_sum(words: Iterable[Word], k: int = 2) -> Fraction:
    """Exact Kraft sum of k^-|w| over the words"""
    return sum((Fraction(1, k ** len(w)) for w in set(words)), Fraction(0))


@dataclass(frozen=True)
class CodeClassification:
    """Result of classify_code: either not a code, or a code with a maximality flag"""

    is_code: bool
    maximal: bool = False

    def __str__(self) -> str:
        if not self.is_code:
            return "not_a_code"
        return f"code(maximal={'true' if self.maximal else 'false'})"


def classify_code(words: Iterable[Word], k: int = 2) -> CodeClassification:
    """
    Classify a finite set of words

    Returns not_a_code if some member prefixes another, otherwise a code whose
    maximality is decided by exact Kraft-sum equality.
    """
    members = {validate_word(w, k) for w in words}
    if _first_prefix_pair(members) is not None:
        return CodeClassification(is_code=False)
    return CodeClassification(is_code=True, maximal=kraft_sum(members, k) == 1)


@dataclass(frozen=True)
class PrefixCode:
    """
    Finite prefix code over the digit alphabet of arity k

    Immutable; construction validates the antichain property.
    """

    members: FrozenSet[Word]
    arity: int = 2
    _sorted: tuple = field(default=(), init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        members = frozenset(self.members)
        for word in members:
            validate_word(word, self.arity)
        pair = _first_prefix_pair(members)
        if pair is not None:
            raise CodeError(
                ErrorCode.NOT_A_CODE,
                f"{format_word(pair[0])} is a prefix of {format_word(pair[1])}",
            )
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_sorted", tuple(sorted(members)))

    @classmethod
    def of(cls, words: Iterable[Word], k: int = 2) -> "PrefixCode":
        return cls(frozenset(words), k)

    def __iter__(self):
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self._sorted)

    def __contains__(self, word: object) -> bool:
        return word in self.members

    @property
    def words(self) -> tuple:
        """Members in lexicographic order"""
        return self._sorted

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self._sorted), default=0)

    @property
    def kraft(self) -> Fraction:
        return kraft_sum(self._sorted, self.arity)

    @property
    def is_maximal(self) -> bool:
        return bool(self._sorted) and self.kraft == 1

    def prefix_of(self, word: Word) -> Optional[Word]:
        """The unique member that prefixes the word, if any"""
        for length in range(min(len(word), self.max_length) + 1):
            candidate = word[:length]
            if candidate in self.members:
                return candidate
        return None

    def generates(self, word: Word) -> bool:
        """True iff the word lies in the right ideal P·A*"""
        return self.prefix_of(word) is not None

    def to_text(self) -> str:
        return "".join(format_word(w) + "\n" for w in self._sorted)

    @classmethod
    def from_text(cls, text: str, k: int = 2) -> "PrefixCode":
        lines = [ln.strip() for ln in text.splitlines()]
        return cls.of((parse_word(ln, k) for ln in lines if ln and not ln.startswith("#")), k)


def minimal_elements(words: Iterable[Word], k: int = 2) -> PrefixCode:
    """
    The prefix code generating the same right ideal as the given words

    Drops every word that has a proper prefix in the set.
    """
    ordered = sorted(set(words))
    kept: List[Word] = []
    for word in ordered:
        if kept and word.startswith(kept[-1]):
            continue
        kept.append(word)
    return PrefixCode.of(kept, k)


def uniform_code(k: int, length: int) -> PrefixCode:
    """The maximal code of all words of one length"""
    return PrefixCode.of(all_words(k, length), k)


def ideal_intersection(p: PrefixCode, q: PrefixCode) -> PrefixCode:
    """
    Prefix code S with S·A* = P·A* ∩ Q·A*

    A member of Q survives when some member of P prefixes it; a member of P
    survives when some member of Q properly prefixes it. The result is a
    subset of P ∪ Q.
    """
    if p.arity != q.arity:
        raise CodeError(ErrorCode.ARITY_MISMATCH, f"arities {p.arity} and {q.arity} differ")
    result = {w for w in q if p.generates(w)}
    for w in p:
        if any(w[:n] in q for n in range(len(w))):
            result.add(w)
    return PrefixCode.of(result, p.arity)


def is_essential_bruteforce(code: PrefixCode) -> bool:
    """
    Maximality oracle by enumeration

    A code is maximal iff every word of length max|p|+1 has a prefix in it.
    """
    if not len(code):
        return False
    return all(code.generates(w) for w in all_words(code.arity, code.max_length + 1))
