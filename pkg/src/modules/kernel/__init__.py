"""
Kernel Module

Polynomial presentation of the flop kernel and its identities.
"""

from .flopkernel import (
    FAMILIES,
    GENERIC_FAMILIES,
    KernelRing,
    PolyMatrix,
    bimodule_sides,
    ideal_sides,
    kernel_ring,
    koszul_resolution_sides,
    verify_bimodule_maps,
    verify_homomorphism,
    verify_ideal_identity,
    verify_koszul_resolution,
    verify_pinch_character,
    verify_quotient_map
)

__all__ = [
    'FAMILIES',
    'GENERIC_FAMILIES',
    'KernelRing',
    'PolyMatrix',
    'bimodule_sides',
    'ideal_sides',
    'kernel_ring',
    'koszul_resolution_sides',
    'verify_bimodule_maps',
    'verify_homomorphism',
    'verify_ideal_identity',
    'verify_koszul_resolution',
    'verify_pinch_character',
    'verify_quotient_map'
]
