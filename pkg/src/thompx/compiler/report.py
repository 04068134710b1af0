"""
Compile Reports

A compiled word together with the size of the circuit it came from.
Serialized as the word text followed by a trailer comment::

    gamma_and
    # source_size=4 word_length=1 max_tau=0
"""

import re
from dataclasses import dataclass, field
from typing import Dict

from thompx.core.errors import CompileError, ErrorCode
from thompx.generators.words import GeneratorWord, eval_word, parse_word
from thompx.thompson.element import ThompsonElement

_TRAILER_RE = re.compile(r"^#\s*source_size=(\d+)\s+word_length=(\d+)\s+max_tau=(\d+)\s*$")


@dataclass(frozen=True)
class CompileReport:
    """
    Compiled word and its measurements

    Attributes:
        word: Output word (application order)
        source_size: Size of the source circuit or word
        kind: Which translation produced the word
    """

    word: GeneratorWord
    source_size: int
    kind: str = field(default="word", compare=False)

    @property
    def word_length(self) -> int:
        return len(self.word)

    @property
    def max_tau(self) -> int:
        return self.word.max_tau

    @property
    def ratio(self) -> float:
        """word_length / source_size (0 for an empty source)"""
        return self.word_length / self.source_size if self.source_size else 0.0

    def element(self) -> ThompsonElement:
        """Canonical element of the word; exponential in max_tau"""
        return eval_word(self.word)

    def summary(self) -> Dict[str, int]:
        return {
            "source_size": self.source_size,
            "word_length": self.word_length,
            "max_tau": self.max_tau,
        }

    def to_text(self) -> str:
        trailer = " ".join(f"{k}={v}" for k, v in self.summary().items())
        return self.word.to_text() + f"# {trailer}\n"

    @classmethod
    def from_text(cls, text: str) -> "CompileReport":
        """
        Parse a report; a plain word file gets source_size 0

        Raises:
            CompileError: MALFORMED_INPUT if the trailer disagrees with the word
        """
        word = parse_word(text)
        source_size = 0
        for line in text.splitlines():
            match = _TRAILER_RE.match(line.strip())
            if not match:
                continue
            source_size = int(match.group(1))
            if int(match.group(2)) != len(word) or int(match.group(3)) != word.max_tau:
                raise CompileError(ErrorCode.MALFORMED_INPUT, "report trailer does not match word")
        return cls(word, source_size)
