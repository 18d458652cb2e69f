"""
Staircase Complexes

Staircase complexes and their Euler characteristic oracle.

Diagrams here are labels: L_delta is the Schur functor whose highest weight
is the conjugate of delta, so a full row of length d is one power of the
determinant. schur_weight converts a label to its highest weight.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..combinatorics import Partition, conjugate, enumerate_partitions
from ..geometry import grassmann_cohomology
from ..representations import (
    DominantWeight,
    GradedMultiCharacter,
    GroupProfile,
    dual_weight,
    multiply,
    sym_hom_character,
    tensor_decompose
)
from ..utils.check_result import CheckResult
from ..utils.constants import SLOT_V, SLOT_W, SLOT_WPRIME

DEGREE_CONVENTION = "free term k sits in degree s_k; total degree is polynomial degree on k[Z]"


def schur_weight(label: Partition, rank: int) -> DominantWeight:
    """Highest weight of L_label on a space of the given rank."""
    if label.width > rank:
        raise ValueError(f"label {label} is wider than rank {rank}")
    return DominantWeight.from_partition(conjugate(label), rank)


@dataclass(frozen=True)
class DSComplexSpec:
    """A staircase complex: the diagram delta and its terms (delta^k, s_k)."""
    delta: Partition
    d: int
    mprime: int
    terms: Tuple[Tuple[Partition, int], ...]

    @property
    def K(self) -> int:
        return len(self.terms) - 1

    def with_shifted_term(self, k: int, by: int) -> "DSComplexSpec":
        """Copy with s_k moved by the given amount."""
        if not 0 <= k <= self.K:
            raise ValueError(f"term index {k} out of range [0, {self.K}]")
        terms = list(self.terms)
        diagram, s = terms[k]
        terms[k] = (diagram, s + by)
        return DSComplexSpec(self.delta, self.d, self.mprime, tuple(terms))

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        return {
            "delta": self.delta.to_list(),
            "d": self.d,
            "mprime": self.mprime,
            "K": self.K,
            "terms": [{"delta": diagram.to_list(), "s": s} for diagram, s in self.terms]
        }


def _check_staircase_input(delta: Partition, d: int, mprime: int) -> None:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if mprime < d:
        raise ValueError(f"mprime must be >= d, got mprime={mprime}, d={d}")
    if delta.width >= d:
        raise ValueError(f"delta {delta} must have width < d={d}")


def ds_staircase(delta: Partition, d: int, mprime: int) -> DSComplexSpec:
    """
    Staircase complex of delta.

    delta^1 extends row 1 to width d; delta^k extends row k to one more than
    row k - 1 of delta. s_k counts the added boxes and the complex stops at
    the last K with s_K <= mprime.

    Args:
        delta: Label of width < d
        d: Rank of V
        mprime: Rank of W'

    Returns:
        DSComplexSpec with terms (delta^0 = delta, 0), ..., (delta^K, s_K)

    Raises:
        ValueError: If width(delta) >= d or mprime < d
    """
    _check_staircase_input(delta, d, mprime)
    terms = [(delta, 0)]
    rows = list(delta.parts)
    k = 1
    while True:
        target = d if k == 1 else delta.row(k - 2) + 1
        while len(rows) < k:
            rows.append(0)
        rows[k - 1] = target
        diagram = Partition(tuple(rows))
        s = diagram.size - delta.size
        if s > mprime:
            break
        terms.append((diagram, s))
        k += 1
    return DSComplexSpec(delta, d, mprime, tuple(terms))


def ring_character(profile: GroupProfile, cutoff: int) -> GradedMultiCharacter:
    """Sym(V tensor W^dual) * Sym(W' tensor V^dual), the character of k[Z]."""
    return multiply(
        sym_hom_character(SLOT_V, SLOT_W + "*", profile, cutoff),
        sym_hom_character(SLOT_WPRIME, SLOT_V + "*", profile, cutoff)
    )


def pushforward_terms(
    label: DominantWeight,
    d: int,
    mprime: int,
    cutoff: int
) -> List[Tuple[int, int, DominantWeight, DominantWeight, int]]:
    """
    Euler characteristic of L_label(U) tensor L_mu(U^dual) over Gr(d - 1, V).

    Sums over mu with |mu| <= cutoff and at most min(d - 1, mprime) rows,
    the GL(W')-partner of each mu being L_mu(W').

    Args:
        label: GL(d - 1) weight of the first factor
        d: Rank of V
        mprime: Rank of W'
        cutoff: Bound on |mu|

    Returns:
        (bwb degree, |mu|, GL(V) weight, GL(W') weight, multiplicity) tuples
    """
    found = []
    height = min(d - 1, mprime)
    for size in range(cutoff + 1):
        for mu in enumerate_partitions(size, height):
            mu_dual = dual_weight(DominantWeight.from_partition(mu, d - 1))
            for gamma, mult in tensor_decompose(label, mu_dual).items():
                outcome = grassmann_cohomology(d - 1, d, gamma, DominantWeight.zero(1))
                if not outcome.is_zero:
                    found.append((outcome.degree, size, outcome.weight,
                                  DominantWeight.from_partition(mu, mprime), mult))
    return found


def hstar_euler_character(
    delta: Partition,
    d: int,
    m: int,
    mprime: int,
    cutoff: int
) -> GradedMultiCharacter:
    """
    Euler characteristic of the pushforward of L_delta(H^dual).

    Sym(V tensor W^dual) times the sum over mu of L_mu(W') tensor
    chi(Gr(d - 1, V), L_delta(U^dual) tensor L_mu(U^dual)), in degree |mu|.
    """
    if delta.width > d - 1:
        raise ValueError(f"delta {delta} must have width <= d - 1 = {d - 1}")
    profile = GroupProfile.flop(d, m, mprime)
    label = dual_weight(schur_weight(delta, d - 1))
    terms = [
        (size, profile.key_from({SLOT_V: omega, SLOT_WPRIME: w_weight}), (-1) ** degree * mult)
        for degree, size, omega, w_weight, mult in pushforward_terms(label, d, mprime, cutoff)
    ]
    pushed = GradedMultiCharacter.from_terms(profile, cutoff, terms)
    return multiply(sym_hom_character(SLOT_V, SLOT_W + "*", profile, cutoff), pushed)


def ds_free_character(spec: DSComplexSpec, m: int, cutoff: int) -> GradedMultiCharacter:
    """
    Alternating sum of the free terms of a staircase complex.

    Term k is L_{delta^k}(V^dual) tensor Lambda^{s_k}(W') tensor k[Z] in
    degree s_k; terms with s_k > mprime vanish.
    """
    profile = GroupProfile.flop(spec.d, m, spec.mprime)
    generators = GradedMultiCharacter.zero(profile, cutoff)
    for k, (diagram, s) in enumerate(spec.terms):
        if s > spec.mprime or s > cutoff:
            continue
        generators = generators + GradedMultiCharacter.single_term(
            profile, cutoff, s,
            {
                SLOT_V: dual_weight(schur_weight(diagram, spec.d)),
                SLOT_WPRIME: DominantWeight.from_partition(Partition((1,) * s), spec.mprime)
            },
            (-1) ** k
        )
    return multiply(generators, ring_character(profile, cutoff))


def verify_ds_euler(
    delta: Partition,
    d: int,
    m: int,
    mprime: int,
    cutoff: int,
    complex_spec: Optional[DSComplexSpec] = None
) -> CheckResult:
    """
    Euler characteristic identity of the staircase complex.

    Args:
        delta: Label of width < d
        d, m, mprime: Flop dimensions
        cutoff: Degree bound
        complex_spec: Complex to test instead of ds_staircase(delta, d, mprime)

    Returns:
        CheckResult with the first mismatching (degree, weight triple)
    """
    params = {"delta": delta.to_list(), "d": d, "m": m, "mprime": mprime, "cutoff": cutoff}
    spec = complex_spec if complex_spec is not None else ds_staircase(delta, d, mprime)
    free = ds_free_character(spec, m, cutoff)
    pushed = hstar_euler_character(delta, d, m, mprime, cutoff)
    details = {"K": spec.K, "degree_convention": DEGREE_CONVENTION}
    difference = free.first_difference(pushed)
    if difference:
        return CheckResult.failure("ds_euler", params, difference, details)
    return CheckResult("ds_euler", params, details=details)
