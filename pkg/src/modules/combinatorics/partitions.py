"""
Partitions

Young diagram arithmetic: conjugation, box enumeration and the column-wise
dotted procedure used by the orthogonality checks.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

EMPTY_SYMBOLS = ("", "[]", "0", "∅")


@dataclass(frozen=True)
class Partition:
    """A Young diagram stored row-wise; trailing zeros are dropped."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"partition parts must be nonnegative, got {list(parts)}")
            if i > 0 and p > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing, got {list(parts)}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Parse a comma-separated diagram such as "2,1" or "[2,1]".

        The empty diagram may be written "", "[]", "0" or "∅".

        Raises:
            ValueError: If the text is not a partition
        """
        cleaned = text.strip()
        if cleaned in EMPTY_SYMBOLS:
            return cls(())
        if cleaned.startswith("[") and cleaned.endswith("]"):
            cleaned = cleaned[1:-1]
        try:
            parts = tuple(int(p) for p in cleaned.split(",") if p.strip())
        except ValueError as e:
            raise ValueError(f"cannot parse partition from '{text}'") from e
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def row(self, i: int) -> int:
        """Length of row i (0-indexed); zero beyond the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        """True when other fits inside this diagram."""
        if other.height > self.height:
            return False
        return all(self.row(i) >= p for i, p in enumerate(other.parts))

    def fits_box(self, height_bound: int, width_bound: int) -> bool:
        return self.height <= height_bound and self.width <= width_bound

    def padded(self, length: int) -> Tuple[int, ...]:
        """Parts padded with zeros to the given length."""
        if self.height > length:
            raise ValueError(f"partition {self} has more than {length} rows")
        return self.parts + (0,) * (length - self.height)

    def sort_key(self) -> Tuple:
        """Canonical order: by size, then longer first rows first."""
        return (self.size, tuple(-p for p in self.parts))

    def to_list(self) -> List[int]:
        return list(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class SigmaBulletResult:
    """Result of the dotted column procedure; diagram and length are unset when singular."""
    diagram: Optional[Partition]
    length: int
    singular: bool

    def to_dict(self):
        """Convert to dictionary."""
        if self.singular:
            return {"singular": True}
        return {"singular": False, "diagram": self.diagram.to_list(), "length": self.length}


def conjugate(lam: Partition) -> Partition:
    """Transpose a diagram: row i of the result counts rows of lam of length >= i."""
    return Partition(tuple(
        sum(1 for p in lam.parts if p >= i)
        for i in range(1, lam.width + 1)
    ))


def _partitions_with_max_part(size: int, max_part: int, max_rows: int) -> Iterator[Tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    if max_rows == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in _partitions_with_max_part(size - first, first, max_rows - 1):
            yield (first,) + rest


def enumerate_partitions(size: int, height_bound: int, width_bound: Optional[int] = None) -> List[Partition]:
    """
    All partitions of size with at most height_bound rows and parts at most width_bound.

    Args:
        size: Number of boxes
        height_bound: Maximum number of rows
        width_bound: Maximum row length (unbounded if None)

    Returns:
        Partitions in canonical order
    """
    if size < 0 or height_bound < 0:
        return []
    max_part = size if width_bound is None else min(size, width_bound)
    found = [Partition(p) for p in _partitions_with_max_part(size, max_part, height_bound)]
    return sorted(found, key=Partition.sort_key)


def enumerate_box(height_bound: int, width_bound: int) -> List[Partition]:
    """
    All partitions fitting in a height_bound x width_bound box.

    Args:
        height_bound: Maximum number of rows
        width_bound: Maximum row length

    Returns:
        C(height_bound + width_bound, width_bound) partitions in canonical order
    """
    if height_bound < 0 or width_bound < 0:
        raise ValueError(f"box bounds must be nonnegative, got {height_bound} x {width_bound}")
    found: List[Partition] = []
    for size in range(height_bound * width_bound + 1):
        found.extend(enumerate_partitions(size, height_bound, width_bound))
    return found


def full_rows(lam: Partition, width: int) -> int:
    """Number of rows of lam of length exactly width."""
    return sum(1 for p in lam.parts if p == width)


def count_inversions(values: Sequence[int]) -> int:
    """Number of pairs i < j with values[i] < values[j]."""
    return sum(
        1
        for i in range(len(values))
        for j in range(i + 1, len(values))
        if values[i] < values[j]
    )


def sigma_bullet(nu: Partition, d: int, column_height: int) -> SigmaBulletResult:
    """
    Column-wise dotted action.

    Column d of nu is set to column_height, the staircase (d, d-1, ..., 1) is
    added to the column lengths, the columns are sorted and the staircase is
    subtracted again. A tie after adding the staircase means the weight is
    singular.

    Args:
        nu: Diagram with fewer than d columns
        d: Ambient rank
        column_height: Height of the column placed in position d, in [0, d]

    Returns:
        SigmaBulletResult with the sorted diagram and the number of inversions
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if nu.width >= d:
        raise ValueError(f"diagram {nu} must have fewer than d={d} columns")
    if not 0 <= column_height <= d:
        raise ValueError(f"column_height must lie in [0, {d}], got {column_height}")

    columns = list(conjugate(nu).padded(d - 1)) + [column_height]
    rho = list(range(d, 0, -1))
    shifted = [c + r for c, r in zip(columns, rho)]

    if len(set(shifted)) < len(shifted):
        return SigmaBulletResult(diagram=None, length=0, singular=True)

    length = count_inversions(shifted)
    ordered = sorted(shifted, reverse=True)
    new_columns = Partition(tuple(v - r for v, r in zip(ordered, rho)))
    return SigmaBulletResult(diagram=conjugate(new_columns), length=length, singular=False)
