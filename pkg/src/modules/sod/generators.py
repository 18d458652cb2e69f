"""
Decomposition Generators

O-generators of the semi-orthogonal decomposition, window generators, and
the rank count that matches them against the Kapranov collection.
"""

from dataclasses import dataclass
from math import comb
from typing import Dict, List

from ..combinatorics import Partition, enumerate_box
from ..utils.check_result import CheckResult


@dataclass(frozen=True)
class WindowGenerator:
    """Member of the Kapranov collection for (d, mprime), by highest weight."""
    weight: Partition

    def sort_key(self):
        return (0, self.weight.sort_key(), 0)

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        return {"kind": "window", "weight": self.weight.to_list()}

    def __str__(self) -> str:
        return f"K{self.weight}"


@dataclass(frozen=True)
class OGenerator:
    """Pushforward generator: a label diagram and a power of det V."""
    diagram: Partition
    det_twist: int

    def __post_init__(self):
        if self.det_twist < 0:
            raise ValueError(f"det_twist must be >= 0, got {self.det_twist}")

    def level(self, s: int) -> int:
        """Level i of the generator inside O_{d,s}."""
        return s - self.det_twist

    def sort_key(self):
        return (1, self.diagram.sort_key(), self.det_twist)

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        return {"kind": "O", "diagram": self.diagram.to_list(), "det_twist": self.det_twist}

    def __str__(self) -> str:
        return f"O{self.diagram}(det^{self.det_twist})"


def o_generators(d: int, s: int, mprime: int) -> List[OGenerator]:
    """
    Generators of O_{d,s}.

    For each level mprime <= i <= s, every label in the (i + 1 - d) x (d - 1)
    box with det twist s - i. Levels ascend; labels follow canonical order.

    Raises:
        ValueError: Unless 1 <= d <= mprime <= s
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not d <= mprime <= s:
        raise ValueError(f"need d <= mprime <= s, got d={d}, mprime={mprime}, s={s}")
    return [
        OGenerator(diagram, s - i)
        for i in range(mprime, s + 1)
        for diagram in enumerate_box(i + 1 - d, d - 1)
    ]


def _exact_shape(generator: OGenerator, d: int, s: int) -> bool:
    i = generator.level(s)
    return generator.diagram.height == i + 1 - d and generator.diagram.width == d - 1


def rank_accounting(d: int, m: int, mprime: int) -> CheckResult:
    """
    Count check C(m, d) = C(mprime, d) + sum_{i=mprime}^{m-1} C(i, d - 1).

    The generator count of O_{d, m-1} must equal the binomial sum. The number
    of generators of exact shape (i + 1 - d) x (d - 1) is reported alongside.

    Raises:
        ValueError: Unless 1 <= d <= mprime <= m
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not d <= mprime <= m:
        raise ValueError(f"need d <= mprime <= m, got d={d}, mprime={mprime}, m={m}")
    params = {"d": d, "m": m, "mprime": mprime}
    generators = o_generators(d, m - 1, mprime) if m > mprime else []
    binomial_sum = sum(comb(i, d - 1) for i in range(mprime, m))
    details = {
        "window_count": comb(mprime, d),
        "generator_count": len(generators),
        "binomial_sum": binomial_sum,
        "total": comb(m, d),
        "exact_height_count": sum(1 for g in generators if _exact_shape(g, d, m - 1))
    }
    if comb(m, d) != comb(mprime, d) + binomial_sum or len(generators) != binomial_sum:
        return CheckResult.failure("rank_accounting", params, {
            "expected": comb(m, d),
            "window_plus_generators": comb(mprime, d) + len(generators)
        }, details)
    return CheckResult("rank_accounting", params, details=details)
