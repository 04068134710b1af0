"""
Generator Catalog

Named Thompson generators, registered by decorator and instantiated by
name. Tables are written out explicitly and canonicalized on first use, so
e.g. C is stored as the reduced {0->0, 10->11, 11->10}.

Transpositions τ(i,j) are not registered: they are parameterized and act
lazily through TauAction.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple, Union

from loguru import logger

from thompx.codes.words import Word, all_words
from thompx.core.errors import ErrorCode, GeneratorError, TableError
from thompx.thompson.element import (
    PrefixAction,
    TauAction,
    ThompsonElement,
    compose,
    identity_element,
    invert,
    reduce,
)

TableBuilder = Callable[[], Dict[Word, Word]]


class GeneratorRegistry:
    """
    Registry for catalog generators

    Generators are registered by name with a function returning their
    (not necessarily reduced) table.
    """

    _builders: Dict[str, TableBuilder] = {}
    _elements: Dict[str, ThompsonElement] = {}

    @classmethod
    def register(cls, name: str):
        """
        Decorator to register a generator table

        Example:
            @GeneratorRegistry.register("sigma")
            def sigma_table():
                return {"0": "00", "10": "01", "11": "1"}
        """

        def decorator(builder: TableBuilder) -> TableBuilder:
            if name in cls._builders:
                logger.warning("Generator '{}' already registered, overwriting", name)
            cls._builders[name] = builder
            cls._elements.pop(name, None)
            logger.debug("Registered generator: {}", name)
            return builder

        return decorator

    @classmethod
    def create(cls, name: str) -> ThompsonElement:
        """
        Canonical element of a registered generator

        Raises:
            GeneratorError: UNKNOWN_GENERATOR if the name is not registered
        """
        if name not in cls._builders:
            raise GeneratorError(
                ErrorCode.UNKNOWN_GENERATOR,
                f"generator '{name}' not registered. Available generators: {cls.list_generators()}",
            )
        if name not in cls._elements:
            cls._elements[name] = reduce(cls._builders[name]())
        return cls._elements[name]

    @classmethod
    def is_registered(cls, name: str) -> bool:
        return name in cls._builders

    @classmethod
    def list_generators(cls) -> List[str]:
        return sorted(cls._builders)

    @classmethod
    def clear(cls) -> None:
        """Drop cached elements (builders stay registered)"""
        cls._elements.clear()
        _element_of.cache_clear()
        logger.debug("Generator element cache cleared")


def _bits(n: int) -> List[Tuple[int, ...]]:
    return [tuple(int(b) for b in w) for w in all_words(2, n)]


def _s(bits) -> Word:
    return "".join(str(b) for b in bits)


# ============================================================================
# LEP MONOID GENERATORS: x1 x2 w -> g(x1, x2) w
# ============================================================================


@GeneratorRegistry.register("gamma_and")
def _gamma_and() -> Dict[Word, Word]:
    return {_s((a, b)): str(a & b) for a, b in _bits(2)}


@GeneratorRegistry.register("gamma_or")
def _gamma_or() -> Dict[Word, Word]:
    return {_s((a, b)): str(a | b) for a, b in _bits(2)}


@GeneratorRegistry.register("gamma_not")
def _gamma_not() -> Dict[Word, Word]:
    return {"0": "1", "1": "0"}


@GeneratorRegistry.register("gamma_fork")
def _gamma_fork() -> Dict[Word, Word]:
    return {"0": "00", "1": "11"}


# ============================================================================
# GROUP GENERATORS
# ============================================================================


def _phi(op: Callable[[int, int], int]) -> Dict[Word, Word]:
    # 0 x1 x2 -> op(x1,x2) x1 x2 and 1 x1 x2 -> not op(x1,x2) x1 x2
    table = {}
    for a, b in _bits(2):
        value = op(a, b)
        table[_s((0, a, b))] = _s((value, a, b))
        table[_s((1, a, b))] = _s((1 - value, a, b))
    return table


@GeneratorRegistry.register("phi_or")
def _phi_or() -> Dict[Word, Word]:
    return _phi(lambda a, b: a | b)


@GeneratorRegistry.register("phi_and")
def _phi_and() -> Dict[Word, Word]:
    return _phi(lambda a, b: a & b)


@GeneratorRegistry.register("phi_not")
def _phi_not() -> Dict[Word, Word]:
    return {"0": "1", "1": "0"}


@GeneratorRegistry.register("sigma")
def _sigma() -> Dict[Word, Word]:
    return {"0": "00", "10": "01", "11": "1"}


@GeneratorRegistry.register("N")
def _n() -> Dict[Word, Word]:
    return {"0": "1", "1": "0"}


@GeneratorRegistry.register("C")
def _c() -> Dict[Word, Word]:
    # x1 x2 w -> x1 (x2 xor x1) w
    return {_s((a, b)): _s((a, a ^ b)) for a, b in _bits(2)}


@GeneratorRegistry.register("T")
def _t() -> Dict[Word, Word]:
    # x1 x2 x3 w -> x1 x2 (x3 xor (x1 and x2)) w
    return {_s((a, b, c)): _s((a, b, c ^ (a & b))) for a, b, c in _bits(3)}


@GeneratorRegistry.register("tau12_0")
def _tau12_0() -> Dict[Word, Word]:
    table = {"1": "1"}
    table.update({_s((0, b, c)): _s((0, c, b)) for b, c in _bits(2)})
    return table


# ============================================================================
# TOKENS
# ============================================================================


@dataclass(frozen=True, order=True)
class Token:
    """
    One generator occurrence in a word

    Either a catalog name (optionally inverted) or a transposition τ(i,j).
    """

    name: str
    i: int = 0
    j: int = 0
    inverted: bool = False

    @property
    def is_tau(self) -> bool:
        return self.name == "tau"

    def __str__(self) -> str:
        if self.is_tau:
            return f"tau({self.i},{self.j})"
        return f"inv({self.name})" if self.inverted else self.name


def tau(i: int, j: int) -> Token:
    """
    Transposition token

    Raises:
        GeneratorError: BAD_TAU_INDEX unless 1 <= i < j
    """
    if not 1 <= i < j:
        raise GeneratorError(ErrorCode.BAD_TAU_INDEX, f"tau({i},{j}) needs 1 <= i < j")
    return Token("tau", i, j)


def tau_or_none(i: int, j: int) -> Optional[Token]:
    """τ(i,j) with the degenerate τ(i,i) mapped to None (identity)"""
    if i == j:
        return None
    return tau(min(i, j), max(i, j))


def gen(name: str) -> Token:
    """Catalog token by name"""
    if not GeneratorRegistry.is_registered(name):
        raise GeneratorError(ErrorCode.UNKNOWN_GENERATOR, f"unknown generator '{name}'")
    return Token(name)


@lru_cache(maxsize=None)
def _element_of(token: Token) -> ThompsonElement:
    if token.is_tau:
        return reduce(TauAction(token.i, token.j).table())
    element = GeneratorRegistry.create(token.name)
    if token.inverted:
        try:
            return invert(element)
        except TableError as exc:
            raise GeneratorError(
                ErrorCode.NOT_INVERTIBLE_TOKEN, f"{token.name} has no inverse"
            ) from exc
    return element


def gen_table(token: Union[Token, str]) -> ThompsonElement:
    """
    Canonical table of a generator

    Raises:
        GeneratorError: UNKNOWN_GENERATOR, BAD_TAU_INDEX
    """
    if isinstance(token, str):
        from thompx.generators.words import parse_token

        token = parse_token(token)
    return _element_of(token)


def action_of(token: Token) -> PrefixAction:
    """How the token acts on words; transpositions stay lazy"""
    if token.is_tau:
        return TauAction(token.i, token.j)
    return _element_of(token)


@lru_cache(maxsize=None)
def is_invertible(token: Token) -> bool:
    if token.is_tau or token.inverted:
        return True
    return _element_of(token).in_g


@lru_cache(maxsize=None)
def is_self_inverse(token: Token) -> bool:
    if token.is_tau:
        return True
    element = _element_of(token)
    return compose(element, element) == identity_element(element.arity)


def inverse_token(token: Token) -> Token:
    """
    Token for the inverse generator

    Raises:
        GeneratorError: NOT_INVERTIBLE_TOKEN for monoid-only generators
    """
    if not is_invertible(token):
        raise GeneratorError(ErrorCode.NOT_INVERTIBLE_TOKEN, f"{token} is not invertible")
    if is_self_inverse(token):
        return token
    return Token(token.name, inverted=not token.inverted)


# ============================================================================
# NAMED GENERATING SETS
# ============================================================================

G21_GENERATORS: Tuple[Token, ...] = (
    Token("sigma"),
    Token("sigma", inverted=True),
    Token("phi_not"),
    Token("phi_or"),
    Token("phi_and"),
    Token("tau12_0"),
)

LEP_GENERATORS: Tuple[Token, ...] = (
    Token("gamma_and"),
    Token("gamma_or"),
    Token("gamma_not"),
    Token("gamma_fork"),
)

MONOTONE_GENERATORS: Tuple[Token, ...] = (
    Token("gamma_and"),
    Token("gamma_or"),
    Token("gamma_fork"),
)

LP_GENERATORS: Tuple[Token, ...] = (Token("N"), Token("C"), Token("T"))

MONOID_GENERATORS: Tuple[Token, ...] = LEP_GENERATORS + G21_GENERATORS + LP_GENERATORS


def adjacent_taus(width: int) -> Tuple[Token, ...]:
    """τ(i,i+1) for 1 <= i < width"""
    return tuple(tau(i, i + 1) for i in range(1, width))


def with_taus(generators: Tuple[Token, ...], width: int) -> Tuple[Token, ...]:
    return tuple(generators) + adjacent_taus(width)
