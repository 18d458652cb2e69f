"""
Representations Module

GL(n) representation arithmetic and graded characters of product groups.
"""

from .glrep import (
    REP_CACHE,
    DominantWeight,
    VirtualRep,
    dual_weight,
    lr_coefficients,
    restrict_weight,
    tensor_decompose,
    weight_sort_key,
    weyl_dim
)
from .charring import (
    GradedMultiCharacter,
    GroupProfile,
    embed_slots,
    exterior_cauchy,
    exterior_hom_character,
    forget_slot,
    invariant_multiplicity,
    invariant_product,
    koszul_alternating_sum,
    multiply,
    restrict_slot,
    sym_hom_character,
    truncate_polynomial
)

__all__ = [
    'REP_CACHE',
    'DominantWeight',
    'VirtualRep',
    'dual_weight',
    'lr_coefficients',
    'restrict_weight',
    'tensor_decompose',
    'weight_sort_key',
    'weyl_dim',
    'GradedMultiCharacter',
    'GroupProfile',
    'embed_slots',
    'exterior_cauchy',
    'exterior_hom_character',
    'forget_slot',
    'invariant_multiplicity',
    'invariant_product',
    'koszul_alternating_sum',
    'multiply',
    'restrict_slot',
    'sym_hom_character',
    'truncate_polynomial'
]
