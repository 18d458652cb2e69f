"""
GL(n) Representation Arithmetic

Dominant weights, Weyl dimensions, Littlewood-Richardson coefficients and
tensor decomposition of rational weights by determinant shifts.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from ..combinatorics import Partition, enumerate_partitions
from ..engine.performance import Cache, cached
from ..utils.constants import INT64_MAX, INT64_MIN, REP_CACHE_MAX_ENTRIES

# Memo table for LR coefficients and tensor products
REP_CACHE = Cache(max_entries=REP_CACHE_MAX_ENTRIES)


def checked_int(value: int) -> int:
    """Reject multiplicities outside the signed 64-bit range."""
    if value < INT64_MIN or value > INT64_MAX:
        raise OverflowError(f"multiplicity {value} exceeds the signed 64-bit range")
    return value


def checked_add(a: int, b: int) -> int:
    return checked_int(a + b)


def checked_mul(a: int, b: int) -> int:
    return checked_int(a * b)


@dataclass(frozen=True)
class DominantWeight:
    """Highest weight of an irreducible rational GL(n)-representation."""
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        for i in range(1, len(entries)):
            if entries[i] > entries[i - 1]:
                raise ValueError(f"weight entries must be weakly decreasing, got {list(entries)}")
        object.__setattr__(self, "entries", entries)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, rank: int) -> "DominantWeight":
        return cls((0,) * rank)

    @classmethod
    def from_partition(cls, lam: Partition, rank: int) -> "DominantWeight":
        """Polynomial weight of lam padded to the rank."""
        if lam.height > rank:
            raise ValueError(f"partition {lam} has more than {rank} rows")
        return cls(lam.padded(rank))

    @property
    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.entries)

    @property
    def size(self) -> int:
        return sum(self.entries)

    def shifted(self, k: int) -> "DominantWeight":
        """Twist by the k-th power of the determinant."""
        return DominantWeight(tuple(e + k for e in self.entries))

    def to_partition(self) -> Partition:
        if not self.is_polynomial:
            raise ValueError(f"weight {self} is not polynomial")
        return Partition(self.entries)

    def to_list(self) -> List[int]:
        return list(self.entries)

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"


def dual_weight(a: DominantWeight) -> DominantWeight:
    """Highest weight of the dual representation."""
    return DominantWeight(tuple(-e for e in reversed(a.entries)))


def weyl_dim(a: DominantWeight) -> int:
    """Dimension of the irreducible representation via the Weyl dimension formula."""
    numerator = 1
    denominator = 1
    n = a.rank
    for i in range(n):
        for j in range(i + 1, n):
            numerator *= a.entries[i] - a.entries[j] + j - i
            denominator *= j - i
    return numerator // denominator


def weight_sort_key(w: DominantWeight) -> Tuple:
    """Deterministic order on weights of one rank: by size, then reverse lexicographic."""
    return (w.size, tuple(-e for e in w.entries))


@dataclass
class VirtualRep:
    """Integer combination of irreducible GL(rank)-representations."""
    rank: int
    terms: Dict[DominantWeight, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: Dict[DominantWeight, int] = {}
        for weight, mult in self.terms.items():
            if weight.rank != self.rank:
                raise ValueError(f"weight {weight} does not have rank {self.rank}")
            checked_int(mult)
            if mult != 0:
                cleaned[weight] = mult
        self.terms = cleaned

    @classmethod
    def irreducible(cls, weight: DominantWeight, mult: int = 1) -> "VirtualRep":
        return cls(weight.rank, {weight: mult})

    @classmethod
    def trivial(cls, rank: int) -> "VirtualRep":
        return cls.irreducible(DominantWeight.zero(rank))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def multiplicity(self, weight: DominantWeight) -> int:
        return self.terms.get(weight, 0)

    def dimension(self) -> int:
        """Signed dimension."""
        total = 0
        for weight, mult in self.terms.items():
            total += mult * weyl_dim(weight)
        return total

    def items(self) -> List[Tuple[DominantWeight, int]]:
        """Terms in deterministic order."""
        return sorted(self.terms.items(), key=lambda item: weight_sort_key(item[0]))

    def _check_rank(self, other: "VirtualRep") -> None:
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        self._check_rank(other)
        terms = dict(self.terms)
        for weight, mult in other.terms.items():
            terms[weight] = checked_add(terms.get(weight, 0), mult)
        return VirtualRep(self.rank, terms)

    def __sub__(self, other: "VirtualRep") -> "VirtualRep":
        return self + other.scaled(-1)

    def scaled(self, k: int) -> "VirtualRep":
        return VirtualRep(self.rank, {w: checked_mul(mult, k) for w, mult in self.terms.items()})

    def dual(self) -> "VirtualRep":
        return VirtualRep(self.rank, {dual_weight(w): mult for w, mult in self.terms.items()})

    def tensor(self, other: "VirtualRep") -> "VirtualRep":
        self._check_rank(other)
        terms: Dict[DominantWeight, int] = defaultdict(int)
        for a, ma in self.terms.items():
            for b, mb in other.terms.items():
                coefficient = checked_mul(ma, mb)
                for nu, c in tensor_decompose(a, b).terms.items():
                    terms[nu] = checked_add(terms[nu], checked_mul(coefficient, c))
        return VirtualRep(self.rank, dict(terms))

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        return {
            "rank": self.rank,
            "terms": [{"weight": w.to_list(), "mult": mult} for w, mult in self.items()]
        }


def _lr_rows(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """
    Yield the shape nu of every LR tableau of shape nu/lam and content mu.

    Rows are filled top to bottom. Row r only holds letters <= r + 1, letters
    increase weakly along a row and strictly down a column, and the reverse
    reading word stays a lattice word.
    """
    n_letters = len(mu)
    n_rows = len(lam) + len(mu)

    def lam_row(r: int) -> int:
        return lam[r] if r < len(lam) else 0

    def fill(r: int, used: List[int], nu: List[int], above: Dict[int, int]):
        if r == n_rows:
            if list(used) == list(mu):
                yield tuple(nu)
            return
        start = lam_row(r)
        max_end = nu[r - 1] if r > 0 else start + (sum(mu) - sum(used))
        space = max_end - start
        if space < 0:
            return
        letters = min(r + 1, n_letters)

        def choose(k: int, counts: List[int], room: int):
            if k > letters:
                yield list(counts)
                return
            cap = min(mu[k - 1] - used[k - 1], room)
            if k >= 2:
                cap = min(cap, used[k - 2] - used[k - 1])
            for x in range(cap, -1, -1):
                counts.append(x)
                yield from choose(k + 1, counts, room - x)
                counts.pop()

        for counts in choose(1, [], space):
            row_letters = []
            for k, x in enumerate(counts, start=1):
                row_letters.extend([k] * x)
            ok = True
            current: Dict[int, int] = {}
            for offset, letter in enumerate(row_letters):
                col = start + offset
                if col in above and above[col] >= letter:
                    ok = False
                    break
                current[col] = letter
            if not ok:
                continue
            new_used = list(used)
            for k, x in enumerate(counts):
                new_used[k] += x
            yield from fill(r + 1, new_used, nu + [start + len(row_letters)], current)

    yield from fill(0, [0] * n_letters, [], {})


@cached(REP_CACHE)
def _lr_table(lam: Partition, mu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    if mu.size == 0:
        return ((lam, 1),)
    if lam.size == 0:
        return ((mu, 1),)
    counts: Dict[Partition, int] = defaultdict(int)
    for shape in _lr_rows(lam.parts, mu.parts):
        counts[Partition(shape)] += 1
    return tuple(sorted(counts.items(), key=lambda item: item[0].sort_key()))


def lr_coefficients(lam: Partition, mu: Partition) -> Dict[Partition, int]:
    """
    Littlewood-Richardson coefficients c^nu_{lam, mu}.

    Args:
        lam: First partition
        mu: Second partition

    Returns:
        Map nu -> c^nu_{lam, mu} over all nu with a positive coefficient
    """
    return dict(_lr_table(lam, mu))


@cached(REP_CACHE)
def _tensor_table(a: DominantWeight, b: DominantWeight) -> Tuple[Tuple[DominantWeight, int], ...]:
    n = a.rank
    if n == 0:
        return ((DominantWeight(()), 1),)
    shift_a = a.entries[-1]
    shift_b = b.entries[-1]
    lam = Partition(tuple(e - shift_a for e in a.entries))
    mu = Partition(tuple(e - shift_b for e in b.entries))
    result = []
    for nu, c in _lr_table(lam, mu):
        if nu.height > n:
            continue
        result.append((DominantWeight.from_partition(nu, n).shifted(shift_a + shift_b), c))
    return tuple(result)


def tensor_decompose(a: DominantWeight, b: DominantWeight) -> VirtualRep:
    """
    Decompose L_a tensor L_b into irreducibles.

    Both weights are shifted by powers of the determinant to partitions, the
    LR rule is applied keeping at most rank rows, and the shift is undone.

    Args:
        a: First weight
        b: Second weight of the same rank

    Returns:
        VirtualRep with positive multiplicities

    Raises:
        ValueError: If the ranks differ
    """
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    return VirtualRep(a.rank, dict(_tensor_table(a, b)))


@cached(REP_CACHE)
def _restriction_table(weight: DominantWeight, rank_a: int, rank_b: int) -> Tuple:
    shift = weight.entries[-1] if weight.rank else 0
    lam = Partition(tuple(e - shift for e in weight.entries))
    result = []
    for size_a in range(lam.size + 1):
        for mu in enumerate_partitions(size_a, rank_a, lam.width):
            if not lam.contains(mu):
                continue
            for nu in enumerate_partitions(lam.size - size_a, rank_b, lam.width):
                c = lr_coefficients(mu, nu).get(lam, 0)
                if c:
                    result.append((
                        DominantWeight.from_partition(mu, rank_a).shifted(shift),
                        DominantWeight.from_partition(nu, rank_b).shifted(shift),
                        c
                    ))
    return tuple(result)


def restrict_weight(
    weight: DominantWeight,
    rank_a: int,
    rank_b: int
) -> List[Tuple[DominantWeight, DominantWeight, int]]:
    """
    Branch an irreducible GL(a + b)-representation to GL(a) x GL(b).

    Args:
        weight: Weight of rank rank_a + rank_b
        rank_a: Rank of the first block
        rank_b: Rank of the second block

    Returns:
        List of (weight on the first block, weight on the second block, multiplicity)
    """
    if rank_a < 0 or rank_b < 0 or rank_a + rank_b != weight.rank:
        raise ValueError(f"cannot branch rank {weight.rank} into {rank_a} + {rank_b}")
    return list(_restriction_table(weight, rank_a, rank_b))
