"""
Morphism Tables

A MorphismTable is the finite table P -> words of a right-ideal
homomorphism: key p maps every word pz to image(p)·z. Tables are immutable
and keep their entries sorted by key, so two tables with the same map are
equal and hash alike.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from thompx.codes.prefix_codes import PrefixCode, minimal_elements
from thompx.codes.words import Word, alphabet, format_word, parse_word, validate_word
from thompx.core.config import get_config
from thompx.core.errors import CodeError, ErrorCode, TableError

Entry = Tuple[Word, Word]

TABLE_HEADER = "thompson"


@dataclass(frozen=True)
class MorphismTable:
    """
    Finite table of a right-ideal homomorphism

    Attributes:
        entries: (key, image) pairs sorted by key; keys form a prefix code
        arity: Alphabet size k
    """

    entries: Tuple[Entry, ...]
    arity: int = 2

    def __post_init__(self) -> None:
        entries = tuple(sorted((str(p), str(q)) for p, q in self.entries))
        keys = [p for p, _ in entries]
        if len(set(keys)) != len(keys):
            raise TableError(ErrorCode.NOT_A_CODE, "two entries share a key")
        try:
            for p, q in entries:
                validate_word(p, self.arity)
                validate_word(q, self.arity)
            PrefixCode.of(keys, self.arity)
        except CodeError as exc:
            raise TableError(exc.code, exc.message) from exc
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, mapping: Mapping[Word, Word], k: int = 2) -> "MorphismTable":
        return cls(tuple(mapping.items()), k)

    @cached_property
    def mapping(self) -> Dict[Word, Word]:
        return dict(self.entries)

    @cached_property
    def max_key_length(self) -> int:
        return max((len(p) for p, _ in self.entries), default=0)

    @property
    def keys(self) -> Tuple[Word, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def images(self) -> Tuple[Word, ...]:
        return tuple(q for _, q in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def domain_code(self) -> PrefixCode:
        return PrefixCode.of(self.keys, self.arity)

    def image_code(self) -> PrefixCode:
        """Minimal prefix code generating the image ideal"""
        return minimal_elements(self.images, self.arity)

    def length(self) -> int:
        """ℓ(t): longest word among keys and images"""
        return max((max(len(p), len(q)) for p, q in self.entries), default=0)

    def lookup(self, word: Word) -> Optional[Entry]:
        """The entry whose key prefixes the word, if any"""
        mapping = self.mapping
        for n in range(min(len(word), self.max_key_length) + 1):
            key = word[:n]
            if key in mapping:
                return key, mapping[key]
        return None

    def apply(self, word: Word) -> Optional[Word]:
        entry = self.lookup(word)
        if entry is None:
            return None
        key, image = entry
        return image + word[len(key):]

    def to_text(self) -> str:
        lines = [f"{TABLE_HEADER} k={self.arity}"]
        lines.extend(f"{format_word(p)} -> {format_word(q)}" for p, q in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "MorphismTable":
        """
        Parse the line-based table format

        Raises:
            TableError: MALFORMED_INPUT on a bad header or entry line
        """
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines or not lines[0].startswith(TABLE_HEADER):
            raise TableError(ErrorCode.MALFORMED_INPUT, "missing 'thompson k=<k>' header")
        header = lines[0].split()
        try:
            k = (
                int(header[1].split("=", 1)[1])
                if len(header) > 1
                else get_config().algebra.default_arity
            )
        except (IndexError, ValueError) as exc:
            raise TableError(ErrorCode.MALFORMED_INPUT, f"bad header {lines[0]!r}") from exc
        mapping: Dict[Word, Word] = {}
        for line in lines[1:]:
            if "->" not in line:
                raise TableError(ErrorCode.MALFORMED_INPUT, f"bad entry line {line!r}")
            left, right = (part.strip() for part in line.split("->", 1))
            key = parse_word(left, k)
            if key in mapping:
                raise TableError(ErrorCode.MALFORMED_INPUT, f"duplicate key {left}")
            mapping[key] = parse_word(right, k)
        return cls.of(mapping, k)


def restrict_to(table: MorphismTable, refinement: Iterable[Word]) -> MorphismTable:
    """
    Restrict a table to a refinement of its domain code

    Key p with image q and refinement pz yields the entry pz -> qz.

    Args:
        table: Table to restrict
        refinement: Prefix code whose ideal lies inside the table's domain

    Returns:
        Table keyed by exactly the refinement

    Raises:
        TableError: REFINEMENT_OUTSIDE_DOMAIN if a word has no key as prefix
    """
    if isinstance(refinement, PrefixCode):
        code = refinement
    else:
        code = PrefixCode.of(refinement, table.arity)
    mapping: Dict[Word, Word] = {}
    for word in code:
        entry = table.lookup(word)
        if entry is None:
            raise TableError(
                ErrorCode.REFINEMENT_OUTSIDE_DOMAIN,
                f"{format_word(word)} has no prefix in the domain code",
            )
        key, image = entry
        mapping[word] = image + word[len(key):]
    return MorphismTable.of(mapping, table.arity)


def restrict_to_cone(table: MorphismTable, letter: str) -> MorphismTable:
    """Partial table of the restriction to letter·A*"""
    mapping = dict(table.mapping)
    if "" in mapping:
        image = mapping.pop("")
        for a in alphabet(table.arity):
            mapping[a] = image + a
    return MorphismTable.of({p: q for p, q in mapping.items() if p.startswith(letter)}, table.arity)


def essential_image_restriction(table: MorphismTable) -> MorphismTable:
    """
    Restrict until the image words form a prefix code (as a set)

    An entry whose image properly prefixes another image is split into its
    k children; this terminates because images only grow up to the longest
    image.
    """
    letters = alphabet(table.arity)
    mapping = dict(table.mapping)
    while True:
        images = set(mapping.values())
        ordered = sorted(images, key=lambda w: (len(w), w))
        short = next(
            (q for q in ordered if any(r != q and r.startswith(q) for r in images)), None
        )
        if short is None:
            return MorphismTable.of(mapping, table.arity)
        for p in [p for p, q in mapping.items() if q == short]:
            del mapping[p]
            for a in letters:
                mapping[p + a] = short + a


def reduce_mapping(
    mapping: Mapping[Word, Word], k: int = 2, order: Optional[np.random.Generator] = None
) -> Dict[Word, Word]:
    """
    Merge sibling entries until no merge applies

    Keys xa_0..xa_{k-1} with images ya_0..ya_{k-1} collapse to x -> y. The
    fixpoint is the maximal essential extension and does not depend on the
    order of merges.

    Args:
        order: When given, candidate parents are tried in a random order
            drawn from this generator instead of longest first
    """
    letters = alphabet(k)
    table = dict(mapping)
    pending: List[Word] = sorted({p[:-1] for p in table if p}, key=len)
    seen = set(pending)
    while pending:
        pick = len(pending) - 1 if order is None else int(order.integers(len(pending)))
        parent = pending.pop(pick)
        seen.discard(parent)
        children = [parent + a for a in letters]
        if not all(c in table for c in children):
            continue
        images = [table[c] for c in children]
        stem = images[0][:-1]
        if not all(img == stem + a for img, a in zip(images, letters)):
            continue
        for child in children:
            del table[child]
        table[parent] = stem
        if parent and parent[:-1] not in seen:
            pending.append(parent[:-1])
            seen.add(parent[:-1])
    return table


def preimage_code(table: MorphismTable, code: PrefixCode) -> PrefixCode:
    """
    Prefix code generating the inverse image of code·A* under the table

    Per entry p -> q: a member r = qu contributes pu, and a member r that
    properly prefixes q contributes p.
    """
    words = []
    for p, q in table.entries:
        for r in code:
            if r.startswith(q):
                words.append(p + r[len(q):])
            elif q.startswith(r):
                words.append(p)
    return minimal_elements(words, table.arity)


def image_code_of(table: MorphismTable, code: PrefixCode) -> PrefixCode:
    """
    Prefix code generating the image of code·A* under the table

    Per entry p -> q: a member r = pu contributes qu, and a member r that
    properly prefixes p contributes q.
    """
    words = []
    for p, q in table.entries:
        for r in code:
            if r.startswith(p):
                words.append(q + r[len(p):])
            elif p.startswith(r):
                words.append(q)
    return minimal_elements(words, table.arity)
