"""
Thompson Elements

Canonical (fully reduced) tables with lazily cached classification flags,
plus composition, inversion and application.

Composition runs against the PrefixAction interface: anything that can say
which key prefixes a word. Transpositions answer that question arithmetically,
so evaluating a word never builds a 2^j-row table for τ(i,j) unless the
composite itself needs one.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from thompx.codes.prefix_codes import classify_code, uniform_code
from thompx.codes.words import Word, all_words, alphabet
from thompx.core.errors import ErrorCode, TableError
from thompx.thompson.table import MorphismTable, reduce_mapping, restrict_to

MORE = object()
"""Sentinel returned by match() when the word is a proper prefix of a key"""

Match = Union[None, object, Tuple[int, Word]]


class PrefixAction(ABC):
    """
    Anything acting on words by prefix replacement

    match(word) returns (key_length, image) when a key prefixes the word,
    MORE when the word is a proper prefix of some key, and None otherwise.
    """

    arity: int = 2

    @abstractmethod
    def match(self, word: Word) -> Match:
        """Locate the key that prefixes the word"""
        pass

    def apply(self, word: Word) -> Optional[Word]:
        hit = self.match(word)
        if hit is None or hit is MORE:
            return None
        length, image = hit  # type: ignore[misc]
        return image + word[length:]


class TauAction(PrefixAction):
    """Lazy action of the bit transposition τ(i, j) (1-based positions)"""

    def __init__(self, i: int, j: int) -> None:
        if not 1 <= i < j:
            raise TableError(
                ErrorCode.BAD_TAU_INDEX, f"transposition needs 1 <= i < j, got ({i},{j})"
            )
        self.i = i
        self.j = j
        self.arity = 2

    def match(self, word: Word) -> Match:
        if len(word) < self.j:
            return MORE
        head = list(word[: self.j])
        head[self.i - 1], head[self.j - 1] = head[self.j - 1], head[self.i - 1]
        return self.j, "".join(head)

    def table(self) -> MorphismTable:
        images = {w: self.match(w)[1] for w in all_words(2, self.j)}
        return MorphismTable.of(images)  # type: ignore[arg-type]

    def __repr__(self) -> str:
        return f"TauAction({self.i},{self.j})"


@dataclass(frozen=True)
class ElementFlags:
    """Classification result for a Thompson element"""

    in_g: bool
    is_lp: bool
    is_lep: bool
    is_monotone: bool
    in_fix0: bool
    in_fix1: bool
    in_stab01: bool

    def as_dict(self) -> Dict[str, bool]:
        return {
            "inG": self.in_g,
            "isLp": self.is_lp,
            "isLep": self.is_lep,
            "isMonotone": self.is_monotone,
            "inFix0": self.in_fix0,
            "inFix1": self.in_fix1,
            "inStab01": self.in_stab01,
        }


class ThompsonElement(PrefixAction):
    """
    Element of the Thompson-Higman monoid in canonical form

    Build through reduce(); the constructor trusts that no merge applies.
    Flags are cached_property values, so each is computed at most once per
    instance (a concurrent recomputation yields the same value).
    """

    def __init__(self, table: MorphismTable) -> None:
        self.table = table
        self.arity = table.arity

    # ------------------------------------------------------------------
    # identity and lookup
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ThompsonElement) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        body = ", ".join(f"{p or 'eps'}->{q or 'eps'}" for p, q in self.table.entries)
        return f"ThompsonElement({{{body}}})"

    def __len__(self) -> int:
        return len(self.table)

    def __iter__(self) -> Iterator[Tuple[Word, Word]]:
        return iter(self.table.entries)

    @property
    def mapping(self) -> Dict[Word, Word]:
        return self.table.mapping

    @cached_property
    def _key_prefixes(self) -> frozenset:
        return frozenset(p[:n] for p in self.table.keys for n in range(len(p)))

    def match(self, word: Word) -> Match:
        entry = self.table.lookup(word)
        if entry is not None:
            return len(entry[0]), entry[1]
        if word in self._key_prefixes:
            return MORE
        return None

    def length(self) -> int:
        return self.table.length()

    @property
    def is_empty(self) -> bool:
        return not self.table

    # ------------------------------------------------------------------
    # flags
    # ------------------------------------------------------------------

    @cached_property
    def is_injective(self) -> bool:
        """Images are distinct and no image prefixes another"""
        images = self.table.images
        if not images or len(set(images)) != len(images):
            return False
        return classify_code(images, self.arity).is_code

    @cached_property
    def in_g(self) -> bool:
        if not self.is_injective:
            return False
        return (
            classify_code(self.table.keys, self.arity).maximal
            and classify_code(self.table.images, self.arity).maximal
        )

    @cached_property
    def is_lp(self) -> bool:
        return bool(self.table) and all(len(p) == len(q) for p, q in self.table.entries)

    @cached_property
    def length_shift(self) -> Optional[int]:
        """Common |q|-|p| over all entries, or None if the entries disagree"""
        shifts = {len(q) - len(p) for p, q in self.table.entries}
        return shifts.pop() if len(shifts) == 1 else None

    @cached_property
    def is_lep(self) -> bool:
        if not self.table or self.length_shift is None:
            return False
        return classify_code(self.table.keys, self.arity).maximal

    def uniform_table(self) -> MorphismTable:
        """Restriction to the uniform code of the longest key length"""
        return restrict_to(self.table, uniform_code(self.arity, self.table.max_key_length))

    @cached_property
    def is_monotone(self) -> bool:
        if not self.is_lep or self.arity != 2:
            return False
        table = self.uniform_table().mapping
        for x, fx in table.items():
            for pos, bit in enumerate(x):
                if bit == "1":
                    continue
                fy = table[x[:pos] + "1" + x[pos + 1:]]
                if any(a == "1" and b == "0" for a, b in zip(fx, fy)):
                    return False
        return True

    def _fixes_cone(self, letter: str) -> bool:
        # a pointwise-fixed cone always merges back to letter -> letter
        mapping = self.table.mapping
        if "" in mapping:
            return mapping[""] == ""
        return mapping.get(letter) == letter

    @cached_property
    def in_fix0(self) -> bool:
        return self._fixes_cone("0")

    @cached_property
    def in_fix1(self) -> bool:
        return self._fixes_cone("1")

    @cached_property
    def in_stab01(self) -> bool:
        if not self.table:
            return False
        mapping = dict(self.table.mapping)
        if "" in mapping:
            image = mapping.pop("")
            mapping.update({a: image + a for a in alphabet(self.arity)})
        for p, q in mapping.items():
            if not q or q[0] != p[0]:
                return False
        return True

    def flags(self) -> ElementFlags:
        return ElementFlags(
            in_g=self.in_g,
            is_lp=self.is_lp,
            is_lep=self.is_lep,
            is_monotone=self.is_monotone,
            in_fix0=self.in_fix0,
            in_fix1=self.in_fix1,
            in_stab01=self.in_stab01,
        )

    def to_text(self) -> str:
        return self.table.to_text()

    @classmethod
    def from_text(cls, text: str) -> "ThompsonElement":
        return reduce(MorphismTable.from_text(text))


def reduce(table: Union[MorphismTable, Mapping[Word, Word]], k: int = 2) -> ThompsonElement:
    """
    Canonical form: the maximal essential extension

    Args:
        table: MorphismTable or a plain key -> image mapping
        k: Arity, used only for plain mappings

    Returns:
        ThompsonElement
    """
    if not isinstance(table, MorphismTable):
        table = MorphismTable.of(table, k)
    reduced = reduce_mapping(table.mapping, table.arity)
    return ThompsonElement(MorphismTable.of(reduced, table.arity))


def identity_element(k: int = 2) -> ThompsonElement:
    return ThompsonElement(MorphismTable.of({"": ""}, k))


def empty_element(k: int = 2) -> ThompsonElement:
    """The zero of the monoid: the element with no entries"""
    return ThompsonElement(MorphismTable((), k))


def compose(second: PrefixAction, first: ThompsonElement) -> ThompsonElement:
    """
    second ∘ first: apply first, then second

    Each entry p -> q of first is pushed through second's domain: a key of
    second prefixing q gives p -> image·rest; if q is a proper prefix of a
    key both sides are refined by one letter; otherwise the entry's cone
    leaves the domain and is dropped. This is the per-entry form of
    intersecting the image ideal of first with the domain ideal of second.

    Raises:
        TableError: ARITY_MISMATCH if the arities differ
    """
    if second.arity != first.arity:
        raise TableError(
            ErrorCode.ARITY_MISMATCH, f"arities {second.arity} and {first.arity} differ"
        )
    letters = alphabet(first.arity)
    result: Dict[Word, Word] = {}
    stack = list(first.table.entries)
    while stack:
        p, q = stack.pop()
        hit = second.match(q)
        if hit is None:
            continue
        if hit is MORE:
            stack.extend((p + a, q + a) for a in letters)
            continue
        length, image = hit  # type: ignore[misc]
        result[p] = image + q[length:]
    return reduce(result, first.arity)


def invert(element: ThompsonElement) -> ThompsonElement:
    """
    Swap keys and images

    Raises:
        TableError: NOT_INVERTIBLE unless images are distinct and form a prefix code
    """
    if not element.is_injective:
        raise TableError(ErrorCode.NOT_INVERTIBLE, "images are not a prefix code of distinct words")
    return reduce({q: p for p, q in element.table.entries}, element.arity)


def apply(element: PrefixAction, word: Word) -> Optional[Word]:
    """image(p)·z for the key p prefixing word = pz, or None when undefined"""
    return element.apply(word)


def equal(a: ThompsonElement, b: ThompsonElement) -> bool:
    return a == b


def classify(element: ThompsonElement) -> ElementFlags:
    return element.flags()
