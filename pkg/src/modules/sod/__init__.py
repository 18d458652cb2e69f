"""
SOD Module

Staircase complexes, O-generators, the generation induction and
orthogonality for the semi-orthogonal decomposition.
"""

from .staircase import (
    DEGREE_CONVENTION,
    DSComplexSpec,
    ds_free_character,
    ds_staircase,
    hstar_euler_character,
    pushforward_terms,
    ring_character,
    schur_weight,
    verify_ds_euler
)
from .generators import OGenerator, WindowGenerator, o_generators, rank_accounting
from .generation import (
    KTheoryExpression,
    evaluate_expression,
    generation_witness,
    generator_class,
    verify_generation
)
from .orthogonality import OrthogonalityCell, orthogonality_cell, verify_orthogonality

__all__ = [
    'DEGREE_CONVENTION',
    'DSComplexSpec',
    'ds_free_character',
    'ds_staircase',
    'hstar_euler_character',
    'pushforward_terms',
    'ring_character',
    'schur_weight',
    'verify_ds_euler',
    'OGenerator',
    'WindowGenerator',
    'o_generators',
    'rank_accounting',
    'KTheoryExpression',
    'evaluate_expression',
    'generation_witness',
    'generator_class',
    'verify_generation',
    'OrthogonalityCell',
    'orthogonality_cell',
    'verify_orthogonality'
]
