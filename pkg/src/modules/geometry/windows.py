"""
Kapranov Windows

Kapranov collections, Ext tables, strong exceptionality and the window
fixed-point check for the kernel transform.

Members of the collection for (d, m) are the highest weights with at most d
rows and at most m - d columns, in canonical order.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Tuple

from ..combinatorics import Partition, enumerate_box, enumerate_partitions
from ..engine.performance import ParallelProcessor, serial_processor
from ..representations import (
    DominantWeight,
    GroupProfile,
    GradedMultiCharacter,
    VirtualRep,
    dual_weight,
    multiply,
    sym_hom_character
)
from ..utils.check_result import CheckResult
from ..utils.constants import DEFAULT_CUTOFF, SLOT_V, SLOT_W
from .bwb import window_ext

CANONICAL_ORDER = "canonical"
REVERSED_ORDER = "reversed"


@dataclass(frozen=True)
class WindowSpec:
    """A Kapranov collection on Gr(d, m)."""
    d: int
    m: int
    members: Tuple[Partition, ...]

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        return {"d": self.d, "m": self.m, "members": [p.to_list() for p in self.members]}


def kapranov_collection(d: int, m: int) -> WindowSpec:
    """
    Kapranov collection for Gr(d, m).

    Args:
        d: Rank of the tautological bundle, >= 1
        m: Dimension of the ambient space, >= d

    Returns:
        WindowSpec with C(m, d) members in canonical order
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if m < d:
        raise ValueError(f"m must be >= d, got m={m}, d={d}")
    return WindowSpec(d, m, tuple(enumerate_box(d, m - d)))


def in_window(lam: Partition, d: int, m: int) -> bool:
    return lam.fits_box(d, m - d)


@dataclass
class ExtTable:
    """Ext groups between all ordered pairs of a window."""
    spec: WindowSpec
    entries: Dict[Tuple[Partition, Partition], Dict[int, VirtualRep]] = field(default_factory=dict)

    def entry(self, alpha: Partition, beta: Partition) -> Dict[int, VirtualRep]:
        return self.entries[(alpha, beta)]

    def hom_dimension(self, alpha: Partition, beta: Partition) -> int:
        degree_zero = self.entries[(alpha, beta)].get(0)
        return degree_zero.dimension() if degree_zero else 0

    def hom_matrix(self) -> List[List[int]]:
        """Degree-zero dimensions, rows indexed by alpha and columns by beta."""
        return [
            [self.hom_dimension(alpha, beta) for beta in self.spec.members]
            for alpha in self.spec.members
        ]

    def positive_degree_entries(self) -> List[Tuple[Partition, Partition, int]]:
        return [
            (alpha, beta, degree)
            for (alpha, beta), degrees in self.entries.items()
            for degree in degrees
            if degree > 0
        ]

    def witnessed_order(self) -> Optional[str]:
        """Order under which the Hom matrix is unitriangular, if any."""
        matrix = self.hom_matrix()
        size = len(matrix)
        if any(matrix[i][i] != 1 for i in range(size)):
            return None
        if all(matrix[i][j] == 0 for i in range(size) for j in range(i)):
            return CANONICAL_ORDER
        if all(matrix[i][j] == 0 for i in range(size) for j in range(i + 1, size)):
            return REVERSED_ORDER
        return None

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        entries = []
        for alpha in self.spec.members:
            for beta in self.spec.members:
                degrees = self.entries[(alpha, beta)]
                entries.append({
                    "alpha": alpha.to_list(),
                    "beta": beta.to_list(),
                    "degrees": {
                        str(degree): {"dimension": rep.dimension(), "content": rep.to_dict()["terms"]}
                        for degree, rep in degrees.items()
                    }
                })
        return {
            "window": self.spec.to_dict(),
            "entries": entries,
            "hom_matrix": self.hom_matrix(),
            "witnessed_order": self.witnessed_order()
        }


def ext_table(spec: WindowSpec, processor: Optional[ParallelProcessor] = None) -> ExtTable:
    """
    Ext groups for every ordered pair of the window.

    Args:
        spec: Window
        processor: Optional parallel processor over pairs

    Returns:
        ExtTable assembled in member order
    """
    processor = processor or serial_processor()
    pairs = [(alpha, beta) for alpha in spec.members for beta in spec.members]
    computed = processor.map_ordered(lambda pair: window_ext(pair[0], pair[1], spec.d, spec.m), pairs)
    return ExtTable(spec, dict(zip(pairs, computed)))


def verify_strong_exceptionality(d: int, m: int, processor: Optional[ParallelProcessor] = None) -> CheckResult:
    """
    Strong exceptionality of the Kapranov collection.

    Positive-degree Ext vanishes for every ordered pair, every diagonal Hom
    contains the trivial summand exactly once and the Hom matrix is
    unitriangular under a recorded order.
    """
    params = {"d": d, "m": m}
    table = ext_table(kapranov_collection(d, m), processor)

    positive = table.positive_degree_entries()
    if positive:
        alpha, beta, degree = positive[0]
        return CheckResult.failure("strong_exceptionality", params, {
            "alpha": alpha.to_list(), "beta": beta.to_list(), "degree": degree
        })

    trivial = DominantWeight.zero(m)
    for alpha in table.spec.members:
        degree_zero = table.entry(alpha, alpha).get(0)
        if degree_zero is None or degree_zero.multiplicity(trivial) != 1:
            return CheckResult.failure("strong_exceptionality", params, {
                "alpha": alpha.to_list(), "reason": "diagonal trivial summand multiplicity is not 1"
            })

    order = table.witnessed_order()
    if order is None:
        return CheckResult.failure("strong_exceptionality", params, {
            "reason": "Hom matrix is not unitriangular", "hom_matrix": table.hom_matrix()
        })
    return CheckResult("strong_exceptionality", params, details={
        "members": len(table.spec), "witnessed_order": order
    })


def verify_beilinson(n: int) -> CheckResult:
    """
    Hom dimensions of the Beilinson collection on P^(n-1).

    The entry for ((i), (j)) is the line bundle O(j - i), whose sections
    have dimension C(n - 1 + j - i, j - i) when j >= i and vanish otherwise.
    """
    params = {"n": n}
    table = ext_table(kapranov_collection(1, n))
    for alpha in table.spec.members:
        for beta in table.spec.members:
            i, j = alpha.width, beta.width
            expected = comb(n - 1 + j - i, j - i) if j >= i else 0
            got = table.hom_dimension(alpha, beta)
            if got != expected:
                return CheckResult.failure("beilinson", params, {
                    "i": i, "j": j, "expected": expected, "got": got
                })
    return CheckResult("beilinson", params, details={"members": len(table.spec)})


def dual_window_weights(d: int, mprime: int) -> List[DominantWeight]:
    """
    Duals of the window for (d, mprime).

    The dual window is the window twisted by the (mprime - d)-th power of
    the dual determinant; the two sets are compared before returning.

    Returns:
        Dual weights in member order

    Raises:
        RuntimeError: If the two sets differ
    """
    spec = kapranov_collection(d, mprime)
    weights = [DominantWeight.from_partition(lam, d) for lam in spec.members]
    duals = [dual_weight(w) for w in weights]
    twisted = {w.shifted(-(mprime - d)) for w in weights}
    if set(duals) != twisted:
        raise RuntimeError(f"dual window differs from the twisted window for d={d}, mprime={mprime}")
    return duals


def verify_dual_window(d: int, mprime: int) -> CheckResult:
    params = {"d": d, "mprime": mprime}
    try:
        duals = dual_window_weights(d, mprime)
    except RuntimeError as e:
        return CheckResult.failure("dual_window", params, {"reason": str(e)})
    return CheckResult("dual_window", params, details={"weights": len(duals)})


def _window_sides(
    alpha: Partition,
    d: int,
    m: int,
    cutoff: int
) -> Tuple[Dict[DominantWeight, VirtualRep], Dict[DominantWeight, VirtualRep], List[Dict]]:
    """
    Both sides of the fixed-point identity, grouped by GL(V)-weight.

    The left side collects the degree-zero GL(W)-content of
    window_ext(alpha, beta) for every polynomial beta with |beta| <= cutoff.
    The right side is Sym(V tensor W^dual) tensor L_alpha(V).
    """
    left: Dict[DominantWeight, VirtualRep] = {}
    higher: List[Dict] = []
    for size in range(cutoff + 1):
        for beta in enumerate_partitions(size, d):
            ext = window_ext(alpha, beta, d, m)
            for degree in ext:
                if degree > 0:
                    higher.append({"beta": beta.to_list(), "degree": degree})
            if 0 in ext:
                left[DominantWeight.from_partition(beta, d)] = ext[0]

    profile = GroupProfile(((SLOT_V, d), (SLOT_W, m)))
    sym_cutoff = max(cutoff - alpha.size, 0)
    sym = sym_hom_character(SLOT_V, SLOT_W + "*", profile, sym_cutoff)
    l_alpha = GradedMultiCharacter.single_term(
        profile, sym_cutoff, 0, {SLOT_V: DominantWeight.from_partition(alpha, d)}
    )
    grouped: Dict[DominantWeight, Dict[DominantWeight, int]] = defaultdict(lambda: defaultdict(int))
    if alpha.size <= cutoff:
        for _, (gamma, w_weight), mult in multiply(sym, l_alpha).terms():
            if gamma.size <= cutoff:
                grouped[gamma][w_weight] += mult
    right = {gamma: VirtualRep(m, dict(content)) for gamma, content in grouped.items()}
    return left, right, higher


def verify_window_fixed_point(
    alpha: Partition,
    d: int,
    m: int,
    mprime: int,
    weight_cutoff: int = DEFAULT_CUTOFF
) -> CheckResult:
    """
    Window members are fixed by the kernel transform, at character level.

    Compares, for every GL(V)-weight gamma with |gamma| <= weight_cutoff,
    the GL(W)-content on both sides. Higher cohomology on the left side is a
    failure; it appears exactly when alpha leaves the window.

    Args:
        alpha: Diagram with at most d rows
        d, m, mprime: Flop dimensions
        weight_cutoff: Bound on |gamma|

    Returns:
        CheckResult naming the first mismatching (gamma, GL(W)-weight)
    """
    params = {"alpha": alpha.to_list(), "d": d, "m": m, "mprime": mprime, "cutoff": weight_cutoff}
    GroupProfile.flop(d, m, mprime)
    if alpha.height > d:
        raise ValueError(f"alpha {alpha} must have at most d={d} rows")

    left, right, higher = _window_sides(alpha, d, m, weight_cutoff)
    if higher:
        return CheckResult.failure("window_fixed_point", params, dict(higher[0], kind="higher_cohomology"))

    for gamma in sorted(set(left) | set(right), key=lambda w: (w.size, tuple(-e for e in w.entries))):
        lhs = left.get(gamma, VirtualRep(m))
        rhs = right.get(gamma, VirtualRep(m))
        if lhs != rhs:
            for w_weight in sorted(set(lhs.terms) | set(rhs.terms), key=lambda w: (w.size, w.entries)):
                if lhs.multiplicity(w_weight) != rhs.multiplicity(w_weight):
                    return CheckResult.failure("window_fixed_point", params, {
                        "kind": "mismatch",
                        "gamma": gamma.to_list(),
                        "w_weight": w_weight.to_list(),
                        "left": lhs.multiplicity(w_weight),
                        "right": rhs.multiplicity(w_weight)
                    })
    return CheckResult("window_fixed_point", params, details={"weights_compared": len(set(left) | set(right))})
