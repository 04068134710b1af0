"""Right-ideal morphism tables and Thompson-Higman elements"""

from thompx.thompson.chains import direct_composable_chain
from thompx.thompson.element import (
    MORE,
    ElementFlags,
    PrefixAction,
    TauAction,
    ThompsonElement,
    apply,
    classify,
    compose,
    empty_element,
    equal,
    identity_element,
    invert,
    reduce,
)
from thompx.thompson.embeddings import embed0, embed1, embed_pair
from thompx.thompson.table import (
    MorphismTable,
    essential_image_restriction,
    image_code_of,
    preimage_code,
    restrict_to,
    restrict_to_cone,
)

__all__ = [
    "MORE",
    "ElementFlags",
    "MorphismTable",
    "PrefixAction",
    "TauAction",
    "ThompsonElement",
    "apply",
    "classify",
    "compose",
    "direct_composable_chain",
    "embed0",
    "embed1",
    "embed_pair",
    "empty_element",
    "equal",
    "essential_image_restriction",
    "identity_element",
    "image_code_of",
    "invert",
    "preimage_code",
    "reduce",
    "restrict_to",
    "restrict_to_cone",
]
