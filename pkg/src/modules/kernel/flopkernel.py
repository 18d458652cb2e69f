"""
Flop Kernel Identities

Symbolic verification of the kernel ring presentation. Polynomial matrices
run over the coordinate families A^L, B^L, A^R, B^R, C and the generic A, B;
the two module structures on the kernel are ring substitutions. The module
also holds the ideal containment witness and the pinch and Koszul character
identities.

Shapes: A-families are d x m', B-families are m x d and C is d x d.
The generic A and B carry the invariants BA that both structures act on.
"""

import random
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..engine.performance import Cache, cached
from ..representations import (
    GradedMultiCharacter,
    GroupProfile,
    exterior_hom_character,
    invariant_product,
    koszul_alternating_sum,
    multiply,
    restrict_slot,
    sym_hom_character
)
from ..utils.check_result import CheckResult
from ..utils.constants import DEFAULT_SEED, KERNEL_CACHE_MAX_ENTRIES, MAX_MATRIX_DIM, SPECIALIZATION_RANGE

FAMILIES = ("aL", "bL", "aR", "bR", "c")
GENERIC_FAMILIES = ("a", "b")

KERNEL_CACHE = Cache(max_entries=KERNEL_CACHE_MAX_ENTRIES)


class PolyMatrix:
    """Matrix of sparse integer polynomials over one kernel ring."""

    def __init__(self, poly_ring: PolyRing, entries: Sequence[Sequence[PolyElement]]):
        rows = [tuple(row) for row in entries]
        if rows and len({len(row) for row in rows}) != 1:
            raise ValueError("matrix rows must have equal length")
        self.ring = poly_ring
        self.entries: Tuple[Tuple[PolyElement, ...], ...] = tuple(rows)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0

    @classmethod
    def zeros(cls, poly_ring: PolyRing, rows: int, cols: int) -> "PolyMatrix":
        return cls(poly_ring, [[poly_ring.zero] * cols for _ in range(rows)])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def _check_same_shape(self, other: "PolyMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero
        entries = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                total = zero
                for k in range(self.cols):
                    total = total + self.entries[i][k] * other.entries[k][j]
                row.append(total)
            entries.append(row)
        return PolyMatrix(self.ring, entries)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same_shape(other)
        return PolyMatrix(self.ring, [
            [a + b for a, b in zip(row_a, row_b)]
            for row_a, row_b in zip(self.entries, other.entries)
        ])

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[-a for a in row] for row in self.entries])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def is_zero(self) -> bool:
        return all(not entry for row in self.entries for entry in row)

    def compose(self, mapping: Mapping[PolyElement, PolyElement]) -> "PolyMatrix":
        """Substitute generators simultaneously in every entry."""
        if not mapping:
            return self
        replacements = list(mapping.items())
        return PolyMatrix(self.ring, [[entry.compose(replacements) for entry in row] for row in self.entries])

    def evaluate(self, point: Sequence[int]) -> Matrix:
        """Integer matrix obtained by substituting a value for every generator."""
        if len(point) != self.ring.ngens:
            raise ValueError(f"expected {self.ring.ngens} values, got {len(point)}")

        def value(entry: PolyElement) -> int:
            total = 0
            for monom, coeff in entry.terms():
                term = int(coeff)
                for x, e in zip(point, monom):
                    if e:
                        term *= x ** e
                total += term
            return total

        return Matrix(self.rows, self.cols, [value(e) for row in self.entries for e in row])

    def first_difference(self, other: "PolyMatrix") -> Optional[Dict]:
        """First entry where the matrices differ, or None."""
        self._check_same_shape(other)
        for i in range(self.rows):
            for j in range(self.cols):
                if self.entries[i][j] != other.entries[i][j]:
                    return {
                        "entry": [i, j],
                        "left": str(self.entries[i][j].as_expr()),
                        "right": str(other.entries[i][j].as_expr())
                    }
        return None

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols})"


class KernelRing:
    """Integer polynomial ring on the entries of A^L, B^L, A^R, B^R, C and the generic A, B."""

    def __init__(self, d: int, m: int, mprime: int):
        for name, value in (("d", d), ("m", m), ("mprime", mprime)):
            if not 1 <= value <= MAX_MATRIX_DIM:
                raise ValueError(f"{name} must lie in [1, {MAX_MATRIX_DIM}], got {value}")
        self.d, self.m, self.mprime = d, m, mprime
        self.shapes = {
            "aL": (d, mprime),
            "bL": (m, d),
            "aR": (d, mprime),
            "bR": (m, d),
            "c": (d, d),
            "a": (d, mprime),
            "b": (m, d)
        }
        self.names: List[str] = [
            f"{family}_{i}_{j}"
            for family in FAMILIES + GENERIC_FAMILIES
            for i in range(self.shapes[family][0])
            for j in range(self.shapes[family][1])
        ]
        self.ring, *generators = ring(",".join(self.names), ZZ, lex)
        self.generators: Dict[str, PolyElement] = dict(zip(self.names, generators))

    def generator_grid(self, family: str) -> List[List[PolyElement]]:
        rows, cols = self.shapes[family]
        return [[self.generators[f"{family}_{i}_{j}"] for j in range(cols)] for i in range(rows)]

    def matrix(self, family: str) -> PolyMatrix:
        if family not in self.shapes:
            raise ValueError(f"unknown family '{family}' (expected one of {', '.join(self.shapes)})")
        return PolyMatrix(self.ring, self.generator_grid(family))

    def matrices(self) -> Dict[str, PolyMatrix]:
        return {family: self.matrix(family) for family in self.shapes}

    def random_point(self, rng: random.Random) -> List[int]:
        low, high = SPECIALIZATION_RANGE
        return [rng.randint(low, high) for _ in self.names]

    def numeric(self, point: Sequence[int]) -> Dict[str, Matrix]:
        """Integer matrices for every family at a point."""
        if len(point) != len(self.names):
            raise ValueError(f"expected {len(self.names)} values, got {len(point)}")
        values = dict(zip(self.names, point))
        result = {}
        for family, (rows, cols) in self.shapes.items():
            result[family] = Matrix(rows, cols, [
                values[f"{family}_{i}_{j}"] for i in range(rows) for j in range(cols)
            ])
        return result

    def substitution(self, images: Mapping[str, PolyMatrix]) -> Dict[PolyElement, PolyElement]:
        """
        Ring map sending every generator of a family to an entry of its image.

        Args:
            images: Family name to replacement matrix of the family's shape

        Returns:
            Generator-to-polynomial mapping for PolyMatrix.compose
        """
        mapping = {}
        for family, image in images.items():
            if family not in self.shapes:
                raise ValueError(f"unknown family '{family}'")
            if image.shape != self.shapes[family]:
                raise ValueError(f"image of {family} must be {self.shapes[family]}, got {image.shape}")
            for i, row in enumerate(self.generator_grid(family)):
                for j, gen in enumerate(row):
                    mapping[gen] = image.entries[i][j]
        return mapping

    def quotient_map(self) -> Dict[PolyElement, PolyElement]:
        """Substitution B^L -> B^R C and A^R -> C A^L onto k[A^L, B^R, C]."""
        mats = self.matrices()
        return self.substitution({"bL": mats["bR"] @ mats["c"], "aR": mats["c"] @ mats["aL"]})

    def p_map(self) -> Dict[PolyElement, PolyElement]:
        """Left structure: B -> B^R C, A -> A^L."""
        mats = self.matrices()
        return self.substitution({"b": mats["bR"] @ mats["c"], "a": mats["aL"]})

    def s_map(self) -> Dict[PolyElement, PolyElement]:
        """Right structure: B -> B^R, A -> C A^L."""
        mats = self.matrices()
        return self.substitution({"b": mats["bR"], "a": mats["c"] @ mats["aL"]})


@cached(KERNEL_CACHE)
def kernel_ring(d: int, m: int, mprime: int) -> KernelRing:
    return KernelRing(d, m, mprime)


def ideal_sides(mats: Mapping) -> Tuple:
    """(B^L - B^R C) A^L + B^R (C A^L - A^R) and B^L A^L - B^R A^R."""
    al, bl, ar, br, c = mats["aL"], mats["bL"], mats["aR"], mats["bR"], mats["c"]
    lhs = (bl - br @ c) @ al + br @ (c @ al - ar)
    rhs = bl @ al - br @ ar
    return lhs, rhs


def bimodule_sides(kr: KernelRing) -> Tuple[PolyMatrix, PolyMatrix, PolyMatrix]:
    """Images of BA under the p and s substitutions, and B^R C A^L."""
    mats = kr.matrices()
    invariants = mats["b"] @ mats["a"]
    target = mats["bR"] @ mats["c"] @ mats["aL"]
    return invariants.compose(kr.p_map()), invariants.compose(kr.s_map()), target


def _rng(rng: Optional[random.Random]) -> random.Random:
    return rng if rng is not None else random.Random(DEFAULT_SEED)


def _params(d: int, m: int, mprime: int, trials: int) -> Dict:
    return {"d": d, "m": m, "mprime": mprime, "trials": trials}


def _numeric_difference(left: Matrix, right: Matrix) -> Optional[List[int]]:
    for i in range(left.rows):
        for j in range(left.cols):
            if left[i, j] != right[i, j]:
                return [i, j]
    return None


def verify_ideal_identity(
    d: int,
    m: int,
    mprime: int,
    trials: int = 0,
    rng: Optional[random.Random] = None
) -> CheckResult:
    """
    Ideal containment witness, symbolically and under random specializations.

    Args:
        d, m, mprime: Matrix dimensions
        trials: Number of random integer specializations
        rng: Seeded generator for the specializations

    Returns:
        CheckResult with the first differing entry on failure
    """
    params = _params(d, m, mprime, trials)
    kr = kernel_ring(d, m, mprime)
    lhs, rhs = ideal_sides(kr.matrices())
    difference = lhs.first_difference(rhs)
    if difference:
        return CheckResult.failure("ideal_identity", params, dict(difference, stage="symbolic"))

    generator = _rng(rng)
    for trial in range(trials):
        point = kr.random_point(generator)
        num_lhs, num_rhs = ideal_sides(kr.numeric(point))
        entry = _numeric_difference(num_lhs, num_rhs) or _numeric_difference(rhs.evaluate(point), num_rhs)
        if entry:
            return CheckResult.failure("ideal_identity", params, {
                "stage": "specialization", "trial": trial, "entry": entry
            })
    return CheckResult("ideal_identity", params)


def verify_bimodule_maps(
    d: int,
    m: int,
    mprime: int,
    trials: int = 0,
    rng: Optional[random.Random] = None
) -> CheckResult:
    """
    Both module structures agree on the invariants generated by BA.

    p sends B to B^R C and A to A^L; s sends B to B^R and A to C A^L. Both
    images of BA must equal B^R C A^L, and the relations B^L = B^R C and
    A^R = C A^L must vanish under the identification with k[A^L, B^R, C].
    Each specialization evaluates the substituted polynomials and compares
    them with the integer product B^R C A^L at the same point.
    """
    params = _params(d, m, mprime, trials)
    kr = kernel_ring(d, m, mprime)
    mats = kr.matrices()
    p_side, s_side, target = bimodule_sides(kr)
    for label, side in (("p", p_side), ("s", s_side)):
        difference = side.first_difference(target)
        if difference:
            return CheckResult.failure("bimodule_maps", params, dict(difference, stage="symbolic", structure=label))

    phi = kr.quotient_map()
    relations = {
        "B^L - B^R C": mats["bL"] - mats["bR"] @ mats["c"],
        "A^R - C A^L": mats["aR"] - mats["c"] @ mats["aL"]
    }
    for label, relation in relations.items():
        image = relation.compose(phi)
        if not image.is_zero():
            zero = PolyMatrix.zeros(kr.ring, image.rows, image.cols)
            return CheckResult.failure("bimodule_maps", params,
                                       dict(image.first_difference(zero), stage="relation", relation=label))

    generator = _rng(rng)
    for trial in range(trials):
        point = kr.random_point(generator)
        num = kr.numeric(point)
        expected = num["bR"] * num["c"] * num["aL"]
        for label, side in (("p", p_side), ("s", s_side)):
            entry = _numeric_difference(side.evaluate(point), expected)
            if entry:
                return CheckResult.failure("bimodule_maps", params, {
                    "stage": "specialization", "trial": trial, "structure": label, "entry": entry
                })
    return CheckResult("bimodule_maps", params)


def verify_quotient_map(
    d: int,
    m: int,
    mprime: int,
    trials: int = 0,
    rng: Optional[random.Random] = None
) -> CheckResult:
    """
    The identification k[A^L, B^L, A^R, B^R, C] -> k[A^L, B^R, C].

    It must send the left projection B^L A^L to the p-image of BA, the right
    projection B^R A^R to the s-image of BA and kill B^L A^L - B^R A^R.
    """
    params = _params(d, m, mprime, trials)
    kr = kernel_ring(d, m, mprime)
    mats = kr.matrices()
    phi = kr.quotient_map()
    p_side, s_side, _ = bimodule_sides(kr)

    checks = [
        ("left_projection", (mats["bL"] @ mats["aL"]).compose(phi), p_side),
        ("right_projection", (mats["bR"] @ mats["aR"]).compose(phi), s_side),
        ("fiber_relation", (mats["bL"] @ mats["aL"] - mats["bR"] @ mats["aR"]).compose(phi),
         PolyMatrix.zeros(kr.ring, kr.m, kr.mprime))
    ]
    for label, left, right in checks:
        difference = left.first_difference(right)
        if difference:
            return CheckResult.failure("quotient_map", params, dict(difference, stage="symbolic", check=label))

    generator = _rng(rng)
    for trial in range(trials):
        num = kr.numeric(kr.random_point(generator))
        num["bL"] = num["bR"] * num["c"]
        num["aR"] = num["c"] * num["aL"]
        _, rhs = ideal_sides(num)
        if not rhs.is_zero_matrix:
            return CheckResult.failure("quotient_map", params, {"stage": "specialization", "trial": trial})
    return CheckResult("quotient_map", params)


def _random_poly_matrix(kr: KernelRing, rows: int, cols: int, rng: random.Random) -> PolyMatrix:
    gens = [kr.generators[name] for name in kr.names]
    entries = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            entry = kr.ring(rng.randint(-3, 3))
            for _ in range(2):
                entry = entry + rng.randint(-3, 3) * rng.choice(gens)
            entry = entry + rng.randint(-2, 2) * rng.choice(gens) * rng.choice(gens)
            row.append(entry)
        entries.append(row)
    return PolyMatrix(kr.ring, entries)


def verify_homomorphism(
    d: int,
    m: int,
    mprime: int,
    trials: int = 0,
    rng: Optional[random.Random] = None
) -> CheckResult:
    """Every kernel substitution commutes with matrix products on random polynomial matrices."""
    params = _params(d, m, mprime, trials)
    kr = kernel_ring(d, m, mprime)
    maps = {"quotient": kr.quotient_map(), "p": kr.p_map(), "s": kr.s_map()}
    generator = _rng(rng)
    for trial in range(trials):
        x = _random_poly_matrix(kr, kr.m, kr.d, generator)
        y = _random_poly_matrix(kr, kr.d, kr.mprime, generator)
        for label, mapping in maps.items():
            difference = (x @ y).compose(mapping).first_difference(x.compose(mapping) @ y.compose(mapping))
            if difference:
                return CheckResult.failure("homomorphism", params, dict(difference, trial=trial, map=label))
    return CheckResult("homomorphism", params)


def verify_pinch_character(d: int, cutoff: int) -> CheckResult:
    """
    First fundamental theorem for the middle copy, at character level.

    Invariants of the middle GL(H) in Sym(V tensor H^dual) * Sym(H tensor V'^dual)
    sit in even total degree 2n and must equal the degree-n Cauchy layer of
    Sym(V tensor V'^dual); odd degrees must vanish.
    """
    params = {"d": d, "cutoff": cutoff}
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    profile = GroupProfile((("V", d), ("H", d), ("V'", d)))
    doubled = 2 * cutoff
    left = invariant_product(
        sym_hom_character("V", "H*", profile, doubled),
        sym_hom_character("H", "V'*", profile, doubled),
        "H"
    )
    outer = profile.without("H")
    cauchy = sym_hom_character("V", "V'*", outer, cutoff)
    right = GradedMultiCharacter(outer, doubled, {2 * deg: layer for deg, layer in cauchy.layers.items()})

    difference = left.first_difference(right)
    if difference:
        return CheckResult.failure("pinch_character", params, difference)
    return CheckResult("pinch_character", params)


def koszul_profile(d: int, m: int, mprime: int) -> GroupProfile:
    return GroupProfile((("V", d), ("S", d), ("Q", m - d), ("W'", mprime)))


def koszul_resolution_sides(
    d: int,
    m: int,
    mprime: int,
    cutoff: int
) -> Tuple[GradedMultiCharacter, GradedMultiCharacter]:
    """
    Both sides of the Koszul identity over GL(V) x GL(S) x GL(Q) x GL(W').

    Left: sum_i (-1)^i Lambda^i(V tensor Q^dual) * Sym(V tensor W^dual) * Sym(W' tensor V^dual),
    with W branched as S + Q. Right: Sym(V tensor S^dual) * Sym(W' tensor V^dual).
    """
    flop = GroupProfile.flop(d, m, mprime)
    profile = koszul_profile(d, m, mprime)
    sym_vw = restrict_slot(sym_hom_character("V", "W*", flop, cutoff), "W", ("S", d), ("Q", m - d))
    sym_wv = sym_hom_character("W'", "V*", profile, cutoff)
    free = multiply(sym_vw, sym_wv)

    koszul = GradedMultiCharacter.zero(profile, cutoff)
    for i in range(min(d * (m - d), cutoff) + 1):
        koszul = koszul + exterior_hom_character(i, "V", "Q*", profile, cutoff).scaled((-1) ** i)
    left = multiply(koszul, free)
    right = multiply(sym_hom_character("V", "S*", profile, cutoff), sym_wv)
    return left, right


def verify_koszul_resolution(d: int, m: int, mprime: int, cutoff: int) -> CheckResult:
    """
    Character identity of the Koszul resolution over the Grassmannian.

    Also checks the generic Koszul identity for T = V tensor Q^dual, which the
    resolution identity specializes.
    """
    params = {"d": d, "m": m, "mprime": mprime, "cutoff": cutoff}
    if m <= d:
        raise ValueError(f"koszul check needs m > d, got m={m}, d={d}")
    left, right = koszul_resolution_sides(d, m, mprime, cutoff)
    difference = left.first_difference(right)
    if difference:
        return CheckResult.failure("koszul_resolution", params, difference)

    profile = koszul_profile(d, m, mprime)
    generic = koszul_alternating_sum("V", "Q*", profile, cutoff)
    difference = generic.first_difference(GradedMultiCharacter.unit(profile, cutoff))
    if difference:
        return CheckResult.failure("koszul_resolution", params, dict(difference, stage="generic_koszul"))
    return CheckResult("koszul_resolution", params)
