"""
Error Types for ThompX

Every failure a public operation can report carries a stable error name, so
callers (and the CLI) can branch on it without parsing messages.
"""

from enum import Enum
from typing import Optional


class ErrorCode(str, Enum):
    """Stable error names shared across modules"""

    # codes / thompson
    REFINEMENT_OUTSIDE_DOMAIN = "REFINEMENT_OUTSIDE_DOMAIN"
    ARITY_MISMATCH = "ARITY_MISMATCH"
    NOT_INVERTIBLE = "NOT_INVERTIBLE"
    NOT_GROUP_ELEMENT = "NOT_GROUP_ELEMENT"
    EMPTY_COMPOSITE = "EMPTY_COMPOSITE"
    NOT_A_CODE = "NOT_A_CODE"
    BAD_ARITY = "BAD_ARITY"

    # generators
    UNKNOWN_GENERATOR = "UNKNOWN_GENERATOR"
    BAD_TAU_INDEX = "BAD_TAU_INDEX"
    NOT_INVERTIBLE_TOKEN = "NOT_INVERTIBLE_TOKEN"

    # circuits
    LENGTH_MISMATCH = "LENGTH_MISMATCH"
    CAP_EXCEEDED = "CAP_EXCEEDED"
    NOT_BIJECTIVE = "NOT_BIJECTIVE"
    BAD_SIZE = "BAD_SIZE"
    NOT_LAYERED = "NOT_LAYERED"

    # compiler
    NOT_DESUGARED = "NOT_DESUGARED"
    NOT_LEP = "NOT_LEP"
    EMPTY_INPUT = "EMPTY_INPUT"
    NOT_INVERSE_PAIR = "NOT_INVERSE_PAIR"
    IMPLICIT_FANOUT = "IMPLICIT_FANOUT"
    TAU_BOUND_EXCEEDED = "TAU_BOUND_EXCEEDED"

    # metrics
    CAP_TOO_SMALL = "CAP_TOO_SMALL"
    FRONTIER_LIMIT = "FRONTIER_LIMIT"
    DOMAIN_NOT_COVERED = "DOMAIN_NOT_COVERED"

    # text formats
    MALFORMED_INPUT = "MALFORMED_INPUT"


class ThompxError(ValueError):
    """
    Base error for all domain failures

    Subclasses ValueError so callers that only care about bad input can keep
    catching ValueError.
    """

    def __init__(self, code: ErrorCode, message: str, detail: Optional[str] = None) -> None:
        self.code = code
        self.message = message
        self.detail = detail
        super().__init__(f"{code.value}: {message}")


class CodeError(ThompxError):
    """Word and prefix-code failures"""


class TableError(ThompxError):
    """Morphism-table and Thompson-element failures"""


class GeneratorError(ThompxError):
    """Generator catalog and word failures"""


class CircuitError(ThompxError):
    """Circuit IR, layering and synthesis failures"""


class CompileError(ThompxError):
    """Circuit/word translation failures"""


class MetricsError(ThompxError):
    """Search and measurement failures"""
