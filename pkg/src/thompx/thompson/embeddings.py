"""
Self-embeddings of G_{2,1}

(g)_0 acts as g below the prefix 0 and as the identity below 1; (g)_1 is
the mirror image. Their images commute, so (f, g) -> (f)_0 (g)_1 embeds the
direct product.
"""

from thompx.core.errors import ErrorCode, TableError
from thompx.thompson.element import ThompsonElement, compose, reduce


def _embed(element: ThompsonElement, active: str, passive: str) -> ThompsonElement:
    if not element.in_g:
        raise TableError(ErrorCode.NOT_GROUP_ELEMENT, f"{element!r} is not in G")
    mapping = {active + p: active + q for p, q in element.table.entries}
    mapping[passive] = passive
    return reduce(mapping, element.arity)


def embed0(element: ThompsonElement) -> ThompsonElement:
    """0x -> 0 g(x), 1x -> 1x"""
    return _embed(element, "0", "1")


def embed1(element: ThompsonElement) -> ThompsonElement:
    """1x -> 1 g(x), 0x -> 0x"""
    return _embed(element, "1", "0")


def embed_pair(f: ThompsonElement, g: ThompsonElement) -> ThompsonElement:
    """(f)_0 (g)_1; the two factors commute"""
    return compose(embed0(f), embed1(g))
