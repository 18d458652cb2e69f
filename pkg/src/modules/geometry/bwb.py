"""
Borel-Weil-Bott Engine

Cohomology of homogeneous bundles L_a(S) tensor L_b(Q) on Gr(d, n) through
the dot action of the symmetric group.

Convention: S is the rank-d tautological sub-bundle and Q the quotient.
The bundle with weights (a, b) is sent to the GL(n)-weight
u = (dual(a), dual(b)); Bott's algorithm runs on u and the outcome is
reported as the GL(n)-representation with highest weight dual(lambda).
Under this convention H^0(S^dual) is the dual defining representation and
H^1(P^1, O(-2)) has weight (1, 1).
"""

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence

from ..combinatorics import Partition, conjugate, enumerate_box, sigma_bullet
from ..combinatorics.partitions import count_inversions
from ..representations import DominantWeight, VirtualRep, dual_weight, tensor_decompose, weyl_dim
from ..utils.check_result import CheckResult
from ..utils.constants import DEFAULT_SERRE_BOUND


@dataclass(frozen=True)
class BwbOutcome:
    """Zero, or the single nonzero cohomology degree with its GL(n) weight."""
    degree: Optional[int] = None
    weight: Optional[DominantWeight] = None

    @classmethod
    def zero(cls) -> "BwbOutcome":
        return cls(None, None)

    @property
    def is_zero(self) -> bool:
        return self.weight is None

    def describe(self) -> str:
        if self.is_zero:
            return "ZERO"
        return f"H^{self.degree} : {self.weight}"

    def dimension(self) -> int:
        return 0 if self.is_zero else weyl_dim(self.weight)

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        if self.is_zero:
            return {"zero": True}
        return {"zero": False, "degree": self.degree, "weight": self.weight.to_list()}


def bott_dot(w: Sequence[int]) -> BwbOutcome:
    """
    Dot action: add rho = (n-1, ..., 0), sort, subtract rho.

    Args:
        w: Any integer sequence of length n

    Returns:
        Zero if w + rho has a repeated entry, otherwise (inversions, sorted weight)
    """
    n = len(w)
    rho = list(range(n - 1, -1, -1))
    shifted = [int(e) + r for e, r in zip(w, rho)]
    if len(set(shifted)) < n:
        return BwbOutcome.zero()
    degree = count_inversions(shifted)
    ordered = sorted(shifted, reverse=True)
    return BwbOutcome(degree, DominantWeight(tuple(v - r for v, r in zip(ordered, rho))))


def grassmann_cohomology(d: int, n: int, a: DominantWeight, b: DominantWeight) -> BwbOutcome:
    """
    Cohomology of L_a(S) tensor L_b(Q) on Gr(d, n).

    Args:
        d: Rank of S (0 <= d <= n)
        n: Dimension of the ambient space
        a: Weight of rank d on S
        b: Weight of rank n - d on Q

    Returns:
        BwbOutcome with a GL(n) weight

    Raises:
        ValueError: On length mismatch
    """
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    if a.rank != d:
        raise ValueError(f"weight on S must have length {d}, got {a.rank}")
    if b.rank != n - d:
        raise ValueError(f"weight on Q must have length {n - d}, got {b.rank}")
    u = dual_weight(a).entries + dual_weight(b).entries
    outcome = bott_dot(u)
    if outcome.is_zero:
        return outcome
    return BwbOutcome(outcome.degree, dual_weight(outcome.weight))


def euler_dimension(outcomes: Iterable[BwbOutcome]) -> int:
    """Signed dimension of a collection of outcomes."""
    return sum((-1) ** o.degree * o.dimension() for o in outcomes if not o.is_zero)


def window_ext(alpha: Partition, beta: Partition, d: int, n: int) -> Dict[int, VirtualRep]:
    """
    Derived global sections of L_alpha(S) tensor L_beta(S)^dual on Gr(d, n).

    This is Ext(L_beta S, L_alpha S). The GL(d)-product is decomposed and
    every summand pushed through Bott's algorithm with trivial Q-weight.

    Returns:
        Map cohomological degree -> GL(n) content (only nonzero degrees)
    """
    if alpha.height > d or beta.height > d:
        raise ValueError(f"diagrams {alpha} and {beta} must have at most d={d} rows")
    product_rep = tensor_decompose(
        DominantWeight.from_partition(alpha, d),
        dual_weight(DominantWeight.from_partition(beta, d))
    )
    trivial_q = DominantWeight.zero(n - d)
    content: Dict[int, Dict[DominantWeight, int]] = defaultdict(lambda: defaultdict(int))
    for gamma, mult in product_rep.items():
        outcome = grassmann_cohomology(d, n, gamma, trivial_q)
        if not outcome.is_zero:
            content[outcome.degree][outcome.weight] += mult
    result = {}
    for degree in sorted(content):
        rep = VirtualRep(n, dict(content[degree]))
        if not rep.is_zero:
            result[degree] = rep
    return result


def dominant_weights(rank: int, low: int, high: int) -> List[DominantWeight]:
    """All dominant weights of the rank with entries in [low, high]."""
    found = []
    for entries in product(range(high, low - 1, -1), repeat=rank):
        if all(entries[i] >= entries[i + 1] for i in range(rank - 1)):
            found.append(DominantWeight(entries))
    return found


def verify_anchors() -> CheckResult:
    """Check the four classical computations that pin the convention."""
    failures = []

    for d, n in [(1, 2), (1, 3), (2, 4), (2, 5)]:
        outcome = grassmann_cohomology(d, n, DominantWeight.zero(d), DominantWeight.zero(n - d))
        if outcome != BwbOutcome(0, DominantWeight.zero(n)):
            failures.append({"anchor": "structure_sheaf", "d": d, "n": n, "got": outcome.describe()})

        s_dual = dual_weight(DominantWeight.from_partition(Partition.of(1), d))
        outcome = grassmann_cohomology(d, n, s_dual, DominantWeight.zero(n - d))
        expected = dual_weight(DominantWeight.from_partition(Partition.of(1), n))
        if outcome != BwbOutcome(0, expected) or weyl_dim(expected) != n:
            failures.append({"anchor": "dual_tautological_sections", "d": d, "n": n, "got": outcome.describe()})

    outcome = grassmann_cohomology(1, 2, DominantWeight((1,)), DominantWeight((0,)))
    if not outcome.is_zero:
        failures.append({"anchor": "O(-1)_vanishing", "got": outcome.describe()})

    outcome = grassmann_cohomology(1, 2, DominantWeight((2,)), DominantWeight((0,)))
    if outcome.is_zero or outcome.degree != 1 or outcome.dimension() != 1:
        failures.append({"anchor": "O(-2)_top_cohomology", "got": outcome.describe()})

    if failures:
        return CheckResult.failure("bwb_anchors", {}, failures[0], {"failures": len(failures)})
    return CheckResult("bwb_anchors", {}, details={"anchors": 4})


def verify_serre_duality(d: int, n: int, bound: int = DEFAULT_SERRE_BOUND) -> CheckResult:
    """
    Serre duality on Gr(d, n) over a grid of weights.

    H^i of L_a(S) tensor L_b(Q) is compared with H^(dim - i) of
    L_(dual(a) + n)(S) tensor L_dual(b)(Q): the weights must be dual up to
    the equivariant offset d * (1, ..., 1) and the degrees complementary.
    """
    params = {"d": d, "n": n, "bound": bound}
    dim = d * (n - d)
    checked = 0
    for a in dominant_weights(d, -bound, bound):
        for b in dominant_weights(n - d, -bound, bound):
            outcome = grassmann_cohomology(d, n, a, b)
            dual_outcome = grassmann_cohomology(d, n, dual_weight(a).shifted(n), dual_weight(b))
            checked += 1
            if outcome.is_zero and dual_outcome.is_zero:
                continue
            ok = (
                not outcome.is_zero and not dual_outcome.is_zero
                and dual_outcome.degree == dim - outcome.degree
                and dual_outcome.weight == dual_weight(outcome.weight).shifted(d)
            )
            if not ok:
                return CheckResult.failure("serre_duality", params, {
                    "a": a.to_list(),
                    "b": b.to_list(),
                    "cohomology": outcome.describe(),
                    "dual_cohomology": dual_outcome.describe()
                })
    return CheckResult("serre_duality", params, details={"pairs": checked})


def verify_dot_action_agreement(d: int) -> CheckResult:
    """
    The column procedure agrees with Bott's algorithm on its column vector.

    Covers every diagram with at most d rows and fewer than d columns and
    every column height in [0, d].
    """
    params = {"d": d}
    cells = 0
    for nu in enumerate_box(d, d - 1):
        columns = list(conjugate(nu).padded(d - 1))
        for column_height in range(d + 1):
            result = sigma_bullet(nu, d, column_height)
            outcome = bott_dot(columns + [column_height])
            cells += 1
            if result.singular != outcome.is_zero:
                agree = False
            elif result.singular:
                agree = True
            else:
                agree = (
                    result.length == outcome.degree
                    and DominantWeight(conjugate(result.diagram).padded(d)) == outcome.weight
                )
            if not agree:
                return CheckResult.failure("dot_action_agreement", params, {
                    "nu": nu.to_list(),
                    "column_height": column_height,
                    "sigma_bullet": result.to_dict(),
                    "bott_dot": outcome.to_dict()
                })
    return CheckResult("dot_action_agreement", params, details={"cells": cells})
