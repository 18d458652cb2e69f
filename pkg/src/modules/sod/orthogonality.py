"""
Orthogonality

Vanishing of every Hom from an O-generator to a window member, checked cell
by cell: brute-force GL(V)-invariants against the full-row criterion.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional

from ..combinatorics import Partition
from ..engine.performance import ParallelProcessor, serial_processor
from ..geometry import kapranov_collection
from ..representations import (
    DominantWeight,
    GradedMultiCharacter,
    GroupProfile,
    dual_weight,
    invariant_product,
    multiply,
    sym_hom_character
)
from ..utils.check_result import CheckResult
from ..utils.constants import SLOT_V, SLOT_W, SLOT_WPRIME
from .generators import OGenerator, o_generators
from .staircase import pushforward_terms, schur_weight


@dataclass
class OrthogonalityCell:
    """Outcome of one (window member, generator) pair."""
    window: Partition
    generator: OGenerator
    det_twist: int
    brute_force_zero: bool
    certified: bool
    first_nonzero: Optional[Dict] = None

    @property
    def agrees(self) -> bool:
        """The full-row criterion and the brute-force invariants give the same verdict."""
        return self.certified == self.brute_force_zero

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        return {
            "lambda": self.window.to_list(),
            "generator": self.generator.to_dict(),
            "det_twist": self.det_twist,
            "brute_force_zero": self.brute_force_zero,
            "certified": self.certified,
            "agrees": self.agrees,
            "first_nonzero": self.first_nonzero
        }


def _pushed_by_degree(
    profile: GroupProfile,
    delta: Partition,
    d: int,
    mprime: int,
    cutoff: int
) -> Dict[int, GradedMultiCharacter]:
    """Pushforward side split by Borel-Weil-Bott degree."""
    label = schur_weight(delta, d - 1).shifted(-(mprime - d))
    grouped: Dict[int, list] = defaultdict(list)
    for degree, size, omega, w_weight, mult in pushforward_terms(label, d, mprime, cutoff):
        grouped[degree].append((size, profile.key_from({SLOT_V: omega, SLOT_WPRIME: w_weight}), mult))
    return {
        degree: GradedMultiCharacter.from_terms(profile, cutoff, terms)
        for degree, terms in sorted(grouped.items())
    }


def orthogonality_cell(
    lam: Partition,
    generator: OGenerator,
    d: int,
    m: int,
    mprime: int,
    cutoff: int,
    det_twist: Optional[int] = None
) -> OrthogonalityCell:
    """
    Invariants for one window member and one generator.

    The window side is Sym(V tensor W^dual) tensor L_lam'(V) with
    lam' = dual(lam) twisted by det^(mprime + 1 - d + t). The generator side
    is pushed through Gr(d - 1, V) and split by cohomological degree; every
    piece must have no GL(V)-invariants against the window side. The
    criterion certifies vanishing when every pushed V-weight omega has
    -omega_1 below the last entry of lam'.

    Args:
        lam: Window member (highest weight)
        generator: O-generator
        d, m, mprime: Flop dimensions
        cutoff: Degree bound
        det_twist: Twist to use instead of the generator's own

    Returns:
        OrthogonalityCell
    """
    twist = generator.det_twist if det_twist is None else det_twist
    profile = GroupProfile.flop(d, m, mprime)
    lam_twisted = dual_weight(DominantWeight.from_partition(lam, d)).shifted(mprime + 1 - d + twist)
    window_side = multiply(
        sym_hom_character(SLOT_V, SLOT_W + "*", profile, cutoff),
        GradedMultiCharacter.single_term(profile, cutoff, 0, {SLOT_V: lam_twisted})
    )

    pieces = _pushed_by_degree(profile, generator.diagram, d, mprime, cutoff)
    first_nonzero = None
    for degree, piece in pieces.items():
        invariants = invariant_product(window_side, piece, SLOT_V)
        if not invariants.is_zero:
            lowest, key, mult = invariants.terms()[0]
            first_nonzero = {"cohomological_degree": degree, "degree": lowest, "mult": mult}
            break

    omegas = [key[0] for piece in pieces.values() for _, key, _ in piece.terms()]
    bound = lam_twisted.entries[-1]
    certified = all(-omega.entries[0] < bound for omega in omegas)
    return OrthogonalityCell(lam, generator, twist, first_nonzero is None, certified, first_nonzero)


def verify_orthogonality(
    d: int,
    m: int,
    mprime: int,
    cutoff: int,
    processor: Optional[ParallelProcessor] = None
) -> CheckResult:
    """
    Orthogonality over every window member and every generator of O_{d, m-1}.

    Cells are evaluated in (window member, generator) order. The check fails
    on any nonzero cell and on any cell where the full-row criterion and the
    brute-force invariants disagree; the first such cell is reported along
    with the number of disagreeing cells.

    Raises:
        ValueError: Unless 1 <= d <= mprime < m
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not d <= mprime < m:
        raise ValueError(f"need d <= mprime < m, got d={d}, mprime={mprime}, m={m}")
    params = {"d": d, "m": m, "mprime": mprime, "cutoff": cutoff}
    processor = processor or serial_processor()
    pairs = [
        (lam, generator)
        for lam in kapranov_collection(d, mprime).members
        for generator in o_generators(d, m - 1, mprime)
    ]
    cells: List[OrthogonalityCell] = processor.map_ordered(
        lambda pair: orthogonality_cell(pair[0], pair[1], d, m, mprime, cutoff), pairs
    )
    details = {
        "cells": len(cells),
        "certified": sum(1 for cell in cells if cell.certified),
        "disagreements": sum(1 for cell in cells if not cell.agrees)
    }
    for cell in cells:
        if not cell.brute_force_zero or not cell.agrees:
            return CheckResult.failure("orthogonality", params, cell.to_dict(), details)
    return CheckResult("orthogonality", params, details=details)
