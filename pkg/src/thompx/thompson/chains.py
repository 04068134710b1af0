"""
Direct Composable Chains

Rewrites a chain of tables φ_1, ..., φ_N (φ_1 applied first) into
Φ_1, ..., Φ_N with the same composite where the image code of each Φ_i is
exactly the domain code of Φ_{i+1}. Lengths stay below the sum of the input
lengths.
"""

from typing import Dict, List, Sequence

from loguru import logger

from thompx.codes.prefix_codes import PrefixCode, ideal_intersection, minimal_elements
from thompx.codes.words import Word
from thompx.core.errors import ErrorCode, TableError
from thompx.thompson.table import MorphismTable, essential_image_restriction, restrict_to


def restrict_images_to(table: MorphismTable, code: PrefixCode) -> MorphismTable:
    """
    Restrict so that the image words are exactly the given code

    Every member s of the code must extend some image q = φ(p); each such p
    contributes the key p·u where s = q·u.
    """
    mapping: Dict[Word, Word] = {}
    for s in code:
        for p, q in table.entries:
            if s.startswith(q):
                mapping[p + s[len(q):]] = s
    return MorphismTable.of(mapping, table.arity)


def direct_composable_chain(chain: Sequence[MorphismTable]) -> List[MorphismTable]:
    """
    Build the direct composable form of a chain

    Args:
        chain: Tables in application order

    Returns:
        Tables with imC(Φ_i) = domC(Φ_{i+1}) and the same composite

    Raises:
        TableError: EMPTY_COMPOSITE if the composite has empty domain
    """
    if not chain:
        return []
    tables = [essential_image_restriction(t) for t in chain]
    if len(tables) == 1:
        if not tables[0]:
            raise TableError(ErrorCode.EMPTY_COMPOSITE, "chain composite is empty")
        return tables

    rest = direct_composable_chain(tables[1:])
    first = tables[0]
    meet = ideal_intersection(first.image_code(), rest[0].domain_code())
    if not len(meet):
        raise TableError(ErrorCode.EMPTY_COMPOSITE, "image of the first factor misses the rest")

    result = [restrict_images_to(first, meet), restrict_to(rest[0], meet)]
    for table in rest[1:]:
        result.append(restrict_to(table, minimal_elements(result[-1].images, table.arity)))
    logger.debug(
        "Direct composable chain of {} factors, lengths {}",
        len(result),
        [t.length() for t in result],
    )
    return result
