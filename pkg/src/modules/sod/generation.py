"""
Generation Witness

Expresses every Kapranov member for (d, m) as an integer combination of
window members for (d, mprime) and O-generators of O_{d, m-1}, at the level
of graded classes of free modules over GL(V), and verifies the expression.

Classes forget GL(W'): a factor Lambda^s(W') contributes C(mprime, s).
The class of an O-generator is the dual staircase complex twisted by det V,
with term k in degree -s_k.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Tuple, Union

from ..combinatorics import Partition, conjugate, enumerate_box, full_rows
from ..representations import (
    DominantWeight,
    GradedMultiCharacter,
    GroupProfile,
    embed_slots,
    forget_slot,
    multiply,
    sym_hom_character
)
from ..utils.check_result import CheckResult
from ..utils.constants import SLOT_V, SLOT_W, SLOT_WPRIME
from .generators import OGenerator, WindowGenerator
from .staircase import ds_staircase, schur_weight

Generator = Union[WindowGenerator, OGenerator]


@dataclass
class KTheoryExpression:
    """Target diagram and its combination of (generator, coefficient, shift)."""
    target: Partition
    combination: List[Tuple[Generator, int, int]] = field(default_factory=list)

    @property
    def max_shift(self) -> int:
        return max((shift for _, _, shift in self.combination), default=0)

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        return {
            "target": self.target.to_list(),
            "combination": [
                dict(generator.to_dict(), coefficient=coefficient, shift=shift)
                for generator, coefficient, shift in self.combination
            ]
        }


def _stack(full: int, d: int, diagram: Partition) -> Partition:
    return Partition((d,) * full + diagram.parts)


def generator_class(generator: Generator, d: int, mprime: int) -> GradedMultiCharacter:
    """
    Finite graded class of a generator over GL(V).

    Args:
        generator: Window member or O-generator
        d: Rank of V
        mprime: Rank of W'

    Returns:
        GradedMultiCharacter over the profile (V) with cutoff 0
    """
    profile = GroupProfile(((SLOT_V, d),))
    if isinstance(generator, WindowGenerator):
        return GradedMultiCharacter.single_term(
            profile, 0, 0, {SLOT_V: DominantWeight.from_partition(generator.weight, d)}
        )
    spec = ds_staircase(generator.diagram, d, mprime)
    terms = []
    for k, (diagram, s) in enumerate(spec.terms):
        key = profile.key_from({SLOT_V: schur_weight(_stack(generator.det_twist, d, diagram), d)})
        terms.append((-s, key, (-1) ** k * comb(mprime, s)))
    return GradedMultiCharacter.from_terms(profile, 0, terms)


def _check_flop_order(d: int, m: int, mprime: int) -> None:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not d <= mprime <= m:
        raise ValueError(f"need d <= mprime <= m, got d={d}, mprime={mprime}, m={m}")


def _expand(
    label: Partition,
    d: int,
    mprime: int,
    memo: Dict[Partition, Dict[Tuple[Generator, int], int]]
) -> Dict[Tuple[Generator, int], int]:
    """
    Combination for the class of L_label(V), keyed by (generator, shift).

    A label whose height is at most mprime - d is a window member. Otherwise,
    with H its height, j = H + d - 1 and f its full rows: if f <= j - mprime
    the staircase of the rows below the full rows (twist f) trades the label
    for labels of the same height with more full rows; else the staircase of
    the rows below the first t + 1 rows, each shortened by one (twist
    t = j - mprime), ends in the label and trades it for lower labels.
    """
    if label in memo:
        return memo[label]
    result: Dict[Tuple[Generator, int], int] = defaultdict(int)
    height = label.height
    if height <= mprime - d:
        result[(WindowGenerator(conjugate(label)), 0)] = 1
        memo[label] = dict(result)
        return memo[label]

    j = height + d - 1
    f = full_rows(label, d)

    def add(sub_label: Partition, coefficient: int, shift: int) -> None:
        for (generator, sub_shift), c in _expand(sub_label, d, mprime, memo).items():
            result[(generator, sub_shift + shift)] += coefficient * c

    if f <= j - mprime:
        delta = Partition(label.parts[f:])
        generator = OGenerator(delta, f)
        result[(generator, 0)] += 1
        for k, (diagram, s) in enumerate(ds_staircase(delta, d, mprime).terms):
            if k == 0:
                continue
            add(_stack(f, d, diagram), -((-1) ** k) * comb(mprime, s), -s)
    else:
        t = j - mprime
        delta = Partition(tuple(p - 1 for p in label.parts[t + 1:] if p > 1))
        generator = OGenerator(delta, t)
        spec = ds_staircase(delta, d, mprime)
        top = spec.K
        sign = (-1) ** top
        result[(generator, mprime)] += sign
        for k, (diagram, s) in enumerate(spec.terms[:top]):
            add(_stack(t, d, diagram), -sign * (-1) ** k * comb(mprime, s), mprime - s)

    memo[label] = {key: c for key, c in result.items() if c != 0}
    return memo[label]


def evaluate_expression(expression: KTheoryExpression, d: int, mprime: int) -> GradedMultiCharacter:
    """Sum of coefficient * t^shift * class(generator) over the profile (V)."""
    profile = GroupProfile(((SLOT_V, d),))
    cutoff = max(expression.max_shift, 0)
    total = GradedMultiCharacter.zero(profile, cutoff)
    for generator, coefficient, shift in expression.combination:
        total = total + generator_class(generator, d, mprime).shifted(shift, cutoff=cutoff).scaled(coefficient)
    return total


def _character_check(
    evaluated: GradedMultiCharacter,
    target: GradedMultiCharacter,
    d: int,
    m: int,
    mprime: int,
    cutoff: int
) -> None:
    """Multiply both classes by the character of k[Z] and compare up to cutoff."""
    flop = GroupProfile.flop(d, m, mprime)
    outer = GroupProfile(((SLOT_V, d), (SLOT_W, m)))
    lowest = min([0] + evaluated.degrees() + target.degrees())
    offset = -lowest
    top = cutoff + offset
    ring = multiply(
        sym_hom_character(SLOT_V, SLOT_W + "*", outer, top),
        forget_slot(sym_hom_character(SLOT_WPRIME, SLOT_V + "*", flop, top), SLOT_WPRIME)
    )
    left = multiply(embed_slots(evaluated, outer).shifted(offset, cutoff=top), ring)
    right = multiply(embed_slots(target, outer).shifted(offset, cutoff=top), ring)
    difference = left.first_difference(right)
    if difference:
        difference["degree"] -= offset
        raise RuntimeError(f"generation witness fails at character level: {difference}")


def generation_witness(lam: Partition, d: int, m: int, mprime: int, cutoff: int) -> KTheoryExpression:
    """
    Write L_lam(V) in terms of the window for (d, mprime) and O_{d, m-1}.

    Args:
        lam: Highest weight in the Kapranov box for (d, m)
        d, m, mprime: Flop dimensions with d <= mprime <= m
        cutoff: Degree bound for the character-level check

    Returns:
        KTheoryExpression in deterministic order

    Raises:
        ValueError: If lam leaves the box or the dimensions are out of order
        RuntimeError: If the expression does not reproduce the target
    """
    _check_flop_order(d, m, mprime)
    if not lam.fits_box(d, m - d):
        raise ValueError(f"{lam} is not in the Kapranov box for d={d}, m={m}")

    combination = _expand(conjugate(lam), d, mprime, {})
    ordered = sorted(combination.items(), key=lambda item: (item[0][0].sort_key(), -item[0][1]))
    expression = KTheoryExpression(lam, [(generator, c, shift) for (generator, shift), c in ordered])

    profile = GroupProfile(((SLOT_V, d),))
    evaluated = evaluate_expression(expression, d, mprime)
    target = GradedMultiCharacter.single_term(
        profile, evaluated.cutoff, 0, {SLOT_V: schur_weight(conjugate(lam), d)}
    )
    difference = evaluated.first_difference(target)
    if difference:
        raise RuntimeError(f"generation witness for {lam} fails at weight {difference}")
    _character_check(evaluated, target, d, m, mprime, cutoff)
    return expression


def verify_generation(d: int, m: int, mprime: int, cutoff: int) -> CheckResult:
    """Run generation_witness for every Kapranov member outside the smaller window."""
    _check_flop_order(d, m, mprime)
    params = {"d": d, "m": m, "mprime": mprime, "cutoff": cutoff}
    targets = [lam for lam in enumerate_box(d, m - d) if not lam.fits_box(d, mprime - d)]
    for lam in targets:
        try:
            generation_witness(lam, d, m, mprime, cutoff)
        except RuntimeError as e:
            return CheckResult.failure("generation", params, {"lambda": lam.to_list(), "reason": str(e)})
    return CheckResult("generation", params, details={"targets": len(targets)})
