"""
Graded Character Ring

Graded virtual characters of products of general linear groups: Sym and
exterior powers of Hom-spaces via the Cauchy formula, products, invariants,
branching and the truncation onto polynomial representations.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ..combinatorics import Partition, conjugate, enumerate_partitions
from ..engine.performance import ParallelProcessor
from ..utils.constants import SLOT_V, SLOT_W, SLOT_WPRIME
from .glrep import (
    DominantWeight,
    checked_add,
    checked_mul,
    dual_weight,
    restrict_weight,
    tensor_decompose,
    weight_sort_key,
    weyl_dim
)

WeightKey = Tuple[DominantWeight, ...]
Layer = Dict[WeightKey, int]

PROFILE_JSON_KEYS = {SLOT_V: "d", SLOT_W: "m", SLOT_WPRIME: "mprime"}
WEIGHT_JSON_KEYS = {SLOT_V: "wV", SLOT_W: "wW", SLOT_WPRIME: "wWp"}


@dataclass(frozen=True)
class GroupProfile:
    """Ordered named slots, one general linear group per slot."""
    slots: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        slots = tuple((str(name), int(rank)) for name, rank in self.slots)
        names = [name for name, _ in slots]
        if len(set(names)) != len(names):
            raise ValueError(f"slot names must be distinct, got {names}")
        for name, rank in slots:
            if rank < 0:
                raise ValueError(f"slot {name} has negative rank {rank}")
            if name.endswith("*"):
                raise ValueError(f"slot name {name} may not end with '*'")
        object.__setattr__(self, "slots", slots)

    @classmethod
    def of(cls, **ranks: int) -> "GroupProfile":
        return cls(tuple(ranks.items()))

    @classmethod
    def flop(cls, d: int, m: int, mprime: int) -> "GroupProfile":
        """
        Profile GL(V) x GL(W) x GL(W') of the flop.

        Raises:
            ValueError: Unless d >= 1, m >= d and mprime >= d
        """
        if d < 1:
            raise ValueError(f"d must be >= 1, got {d}")
        if m < d:
            raise ValueError(f"m must be >= d, got m={m}, d={d}")
        if mprime < d:
            raise ValueError(f"mprime must be >= d, got mprime={mprime}, d={d}")
        return cls(((SLOT_V, d), (SLOT_W, m), (SLOT_WPRIME, mprime)))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.slots)

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(rank for _, rank in self.slots)

    def index(self, name: str) -> int:
        for i, (slot_name, _) in enumerate(self.slots):
            if slot_name == name:
                return i
        raise ValueError(f"unknown slot '{name}' (profile has {', '.join(self.names)})")

    def rank(self, name: str) -> int:
        return self.slots[self.index(name)][1]

    def without(self, name: str) -> "GroupProfile":
        i = self.index(name)
        return GroupProfile(self.slots[:i] + self.slots[i + 1:])

    def trivial_key(self) -> WeightKey:
        return tuple(DominantWeight.zero(rank) for rank in self.ranks)

    def key_from(self, weights: Mapping[str, DominantWeight]) -> WeightKey:
        """Weight key with the given slot weights and trivial weights elsewhere."""
        for name in weights:
            self.index(name)
        key = []
        for name, rank in self.slots:
            weight = weights.get(name, DominantWeight.zero(rank))
            if weight.rank != rank:
                raise ValueError(f"weight {weight} for slot {name} must have rank {rank}")
            key.append(weight)
        return tuple(key)

    def to_dict(self) -> Dict[str, int]:
        """Convert to dictionary."""
        return {PROFILE_JSON_KEYS.get(name, name): rank for name, rank in self.slots}


def _parse_ref(ref: str) -> Tuple[str, bool]:
    ref = ref.strip()
    if ref.endswith("*"):
        return ref[:-1], True
    return ref, False


@dataclass
class GradedMultiCharacter:
    """
    Degree-indexed map from weight keys (one weight per slot) to multiplicities.

    Layers above the cutoff are never stored. Operations take the minimum
    cutoff of their operands and never extend it.
    """
    profile: GroupProfile
    cutoff: int
    layers: Dict[int, Layer] = field(default_factory=dict)

    def __post_init__(self):
        if self.cutoff < 0:
            raise ValueError(f"cutoff must be >= 0, got {self.cutoff}")
        ranks = self.profile.ranks
        cleaned: Dict[int, Layer] = {}
        for degree, layer in self.layers.items():
            if degree > self.cutoff:
                continue
            kept: Layer = {}
            for key, mult in layer.items():
                if mult == 0:
                    continue
                if tuple(w.rank for w in key) != ranks:
                    raise ValueError(f"weight key {[str(w) for w in key]} does not match profile ranks {ranks}")
                kept[key] = mult
            if kept:
                cleaned[degree] = kept
        self.layers = cleaned

    @classmethod
    def zero(cls, profile: GroupProfile, cutoff: int) -> "GradedMultiCharacter":
        return cls(profile, cutoff, {})

    @classmethod
    def unit(cls, profile: GroupProfile, cutoff: int) -> "GradedMultiCharacter":
        """Trivial representation in degree 0."""
        return cls(profile, cutoff, {0: {profile.trivial_key(): 1}})

    @classmethod
    def single_term(
        cls,
        profile: GroupProfile,
        cutoff: int,
        degree: int,
        weights: Mapping[str, DominantWeight],
        mult: int = 1
    ) -> "GradedMultiCharacter":
        return cls(profile, cutoff, {degree: {profile.key_from(weights): mult}})

    @classmethod
    def from_terms(
        cls,
        profile: GroupProfile,
        cutoff: int,
        terms: Iterable[Tuple[int, WeightKey, int]]
    ) -> "GradedMultiCharacter":
        """Accumulate (degree, key, mult) triples."""
        layers: Dict[int, Dict[WeightKey, int]] = defaultdict(lambda: defaultdict(int))
        for degree, key, mult in terms:
            if degree > cutoff:
                continue
            layers[degree][key] = checked_add(layers[degree][key], mult)
        return cls(profile, cutoff, {deg: dict(layer) for deg, layer in layers.items()})

    @property
    def is_zero(self) -> bool:
        return not self.layers

    def degrees(self) -> List[int]:
        return sorted(self.layers)

    def layer(self, degree: int) -> Layer:
        return dict(self.layers.get(degree, {}))

    def terms(self) -> List[Tuple[int, WeightKey, int]]:
        """All (degree, key, mult) in deterministic order."""
        result = []
        for degree in self.degrees():
            for key in sorted(self.layers[degree], key=_key_sort):
                result.append((degree, key, self.layers[degree][key]))
        return result

    def _check_profile(self, other: "GradedMultiCharacter") -> None:
        if other.profile != self.profile:
            raise ValueError(f"profile mismatch: {self.profile.slots} vs {other.profile.slots}")

    def __add__(self, other: "GradedMultiCharacter") -> "GradedMultiCharacter":
        self._check_profile(other)
        cutoff = min(self.cutoff, other.cutoff)
        return GradedMultiCharacter.from_terms(
            self.profile, cutoff, list(self.terms()) + list(other.terms())
        )

    def __sub__(self, other: "GradedMultiCharacter") -> "GradedMultiCharacter":
        return self + other.scaled(-1)

    def scaled(self, k: int) -> "GradedMultiCharacter":
        return GradedMultiCharacter(self.profile, self.cutoff, {
            degree: {key: checked_mul(mult, k) for key, mult in layer.items()}
            for degree, layer in self.layers.items()
        })

    def shifted(self, offset: int, cutoff: Optional[int] = None) -> "GradedMultiCharacter":
        """Move every layer by offset degrees; the cutoff stays unless given."""
        new_cutoff = self.cutoff if cutoff is None else cutoff
        return GradedMultiCharacter(self.profile, new_cutoff, {
            degree + offset: dict(layer) for degree, layer in self.layers.items()
        })

    def with_cutoff(self, cutoff: int) -> "GradedMultiCharacter":
        if cutoff > self.cutoff:
            raise ValueError(f"cannot extend cutoff from {self.cutoff} to {cutoff}")
        return GradedMultiCharacter(self.profile, cutoff, self.layers)

    def dimension(self, degree: int) -> int:
        """Signed dimension of one layer."""
        total = 0
        for key, mult in self.layers.get(degree, {}).items():
            term = mult
            for weight in key:
                term *= weyl_dim(weight)
            total += term
        return total

    def first_difference(self, other: "GradedMultiCharacter") -> Optional[Dict]:
        """
        First (degree, weights) where the two characters disagree.

        Only degrees up to the smaller cutoff are compared.

        Returns:
            None when equal, otherwise a dict with degree, weights and both multiplicities
        """
        self._check_profile(other)
        cutoff = min(self.cutoff, other.cutoff)
        degrees = sorted(d for d in set(self.layers) | set(other.layers) if d <= cutoff)
        for degree in degrees:
            mine = self.layers.get(degree, {})
            theirs = other.layers.get(degree, {})
            for key in sorted(set(mine) | set(theirs), key=_key_sort):
                if mine.get(key, 0) != theirs.get(key, 0):
                    return {
                        "degree": degree,
                        "weights": self._key_to_dict(key),
                        "left": mine.get(key, 0),
                        "right": theirs.get(key, 0)
                    }
        return None

    def _key_to_dict(self, key: WeightKey) -> Dict[str, List[int]]:
        return {
            WEIGHT_JSON_KEYS.get(name, f"w{name}"): weight.to_list()
            for name, weight in zip(self.profile.names, key)
        }

    def to_dict(self) -> Dict:
        """Convert to dictionary."""
        layers = {}
        for degree in self.degrees():
            entries = []
            for key in sorted(self.layers[degree], key=_key_sort):
                entry = self._key_to_dict(key)
                entry["mult"] = self.layers[degree][key]
                entries.append(entry)
            layers[str(degree)] = entries
        return {"profile": self.profile.to_dict(), "cutoff": self.cutoff, "layers": layers}

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMultiCharacter):
            return NotImplemented
        return (self.profile == other.profile and self.cutoff == other.cutoff
                and self.layers == other.layers)


def _key_sort(key: WeightKey) -> Tuple:
    return tuple(weight_sort_key(w) for w in key)


def _slot_weight(lam: Partition, rank: int, dual: bool) -> DominantWeight:
    weight = DominantWeight.from_partition(lam, rank)
    return dual_weight(weight) if dual else weight


def _pair_terms(
    profile: GroupProfile,
    slot_a: int,
    weight_a: DominantWeight,
    slot_b: int,
    weight_b: DominantWeight
) -> List[Tuple[WeightKey, int]]:
    """Weight keys of L_a(A) tensor L_b(B), tensoring when A and B share a slot."""
    base = list(profile.trivial_key())
    if slot_a != slot_b:
        base[slot_a] = weight_a
        base[slot_b] = weight_b
        return [(tuple(base), 1)]
    result = []
    for weight, c in tensor_decompose(weight_a, weight_b).items():
        key = list(base)
        key[slot_a] = weight
        result.append((tuple(key), c))
    return result


def sym_hom_character(
    source: str,
    target: str,
    profile: GroupProfile,
    cutoff: int
) -> GradedMultiCharacter:
    """
    Symmetric algebra on A tensor B via the Cauchy formula.

    Sym(A tensor B) = sum over mu of L_mu(A) tensor L_mu(B), with
    height(mu) <= min(rank A, rank B), placed in degree |mu|.

    Args:
        source: Slot reference for A, e.g. "V" or "W*" for a dual
        target: Slot reference for B
        profile: Group profile holding both slots
        cutoff: Maximum degree

    Returns:
        GradedMultiCharacter truncated at cutoff
    """
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    name_a, dual_a = _parse_ref(source)
    name_b, dual_b = _parse_ref(target)
    slot_a, slot_b = profile.index(name_a), profile.index(name_b)
    rank_a, rank_b = profile.ranks[slot_a], profile.ranks[slot_b]
    height = min(rank_a, rank_b)

    terms = []
    for degree in range(cutoff + 1):
        for mu in enumerate_partitions(degree, height):
            for key, c in _pair_terms(profile, slot_a, _slot_weight(mu, rank_a, dual_a),
                                      slot_b, _slot_weight(mu, rank_b, dual_b)):
                terms.append((degree, key, c))
    return GradedMultiCharacter.from_terms(profile, cutoff, terms)


def exterior_cauchy(i: int, a: int, b: int) -> List[Tuple[Partition, Partition]]:
    """
    Cauchy pieces of the i-th exterior power of A tensor B.

    Args:
        i: Exterior degree, 0 <= i <= a * b
        a: Rank of A
        b: Rank of B

    Returns:
        Pairs (lam, conjugate(lam)) with |lam| = i, height <= a, width <= b
    """
    if i < 0 or i > a * b:
        raise ValueError(f"exterior degree {i} out of range [0, {a * b}]")
    return [(lam, conjugate(lam)) for lam in enumerate_partitions(i, a, b)]


def exterior_hom_character(
    i: int,
    source: str,
    target: str,
    profile: GroupProfile,
    cutoff: int,
    degree: Optional[int] = None
) -> GradedMultiCharacter:
    """
    Exterior power of A tensor B placed in a single degree (default: i).
    """
    name_a, dual_a = _parse_ref(source)
    name_b, dual_b = _parse_ref(target)
    slot_a, slot_b = profile.index(name_a), profile.index(name_b)
    rank_a, rank_b = profile.ranks[slot_a], profile.ranks[slot_b]
    placed = i if degree is None else degree

    terms = []
    for lam, lam_t in exterior_cauchy(i, rank_a, rank_b):
        for key, c in _pair_terms(profile, slot_a, _slot_weight(lam, rank_a, dual_a),
                                  slot_b, _slot_weight(lam_t, rank_b, dual_b)):
            terms.append((placed, key, c))
    return GradedMultiCharacter.from_terms(profile, cutoff, terms)


def _tensor_keys(x_key: WeightKey, y_key: WeightKey) -> List[Tuple[WeightKey, int]]:
    per_slot = [tensor_decompose(a, b).items() for a, b in zip(x_key, y_key)]
    result = []
    for combo in product(*per_slot):
        c = 1
        for _, mult in combo:
            c *= mult
        result.append((tuple(w for w, _ in combo), c))
    return result


def multiply(
    x: GradedMultiCharacter,
    y: GradedMultiCharacter,
    processor: Optional[ParallelProcessor] = None
) -> GradedMultiCharacter:
    """
    Tensor product of graded characters, slot by slot.

    Output layers are computed independently, so a processor may spread them
    over workers without changing the result.

    Args:
        x: First factor
        y: Second factor with the same profile
        processor: Optional parallel processor over output degrees

    Returns:
        Product truncated at min(x.cutoff, y.cutoff)
    """
    x._check_profile(y)
    cutoff = min(x.cutoff, y.cutoff)
    out_degrees = sorted({p + q for p in x.layers for q in y.layers if p + q <= cutoff})

    def build_layer(n: int) -> Layer:
        layer: Dict[WeightKey, int] = defaultdict(int)
        for p in sorted(x.layers):
            q = n - p
            if q not in y.layers:
                continue
            for x_key, x_mult in x.layers[p].items():
                for y_key, y_mult in y.layers[q].items():
                    coefficient = checked_mul(x_mult, y_mult)
                    for key, c in _tensor_keys(x_key, y_key):
                        layer[key] = checked_add(layer[key], checked_mul(coefficient, c))
        return dict(layer)

    if processor is None:
        built = [build_layer(n) for n in out_degrees]
    else:
        built = processor.map_ordered(build_layer, out_degrees)
    return GradedMultiCharacter(x.profile, cutoff, dict(zip(out_degrees, built)))


def invariant_multiplicity(x: GradedMultiCharacter, slot: str) -> GradedMultiCharacter:
    """
    Invariants of one slot, as a character over the remaining slots.

    Args:
        x: Character
        slot: Slot name whose group acts

    Returns:
        Character over the profile without that slot
    """
    i = x.profile.index(slot)
    terms = []
    for degree, key, mult in x.terms():
        weight = key[i]
        if all(e == 0 for e in weight.entries):
            terms.append((degree, key[:i] + key[i + 1:], mult))
    return GradedMultiCharacter.from_terms(x.profile.without(slot), x.cutoff, terms)


def invariant_product(
    x: GradedMultiCharacter,
    y: GradedMultiCharacter,
    slot: str
) -> GradedMultiCharacter:
    """
    Invariants of one slot in the product x * y, without forming the full product.

    L_a tensor L_b contains the trivial representation once when b is the
    dual of a and not at all otherwise.
    """
    x._check_profile(y)
    i = x.profile.index(slot)
    cutoff = min(x.cutoff, y.cutoff)

    by_weight: Dict[DominantWeight, List[Tuple[int, WeightKey, int]]] = defaultdict(list)
    for degree, key, mult in y.terms():
        by_weight[key[i]].append((degree, key, mult))

    terms = []
    for x_degree, x_key, x_mult in x.terms():
        for y_degree, y_key, y_mult in by_weight.get(dual_weight(x_key[i]), []):
            degree = x_degree + y_degree
            if degree > cutoff:
                continue
            rest_x = x_key[:i] + x_key[i + 1:]
            rest_y = y_key[:i] + y_key[i + 1:]
            coefficient = checked_mul(x_mult, y_mult)
            for key, c in _tensor_keys(rest_x, rest_y):
                terms.append((degree, key, checked_mul(coefficient, c)))
    return GradedMultiCharacter.from_terms(x.profile.without(slot), cutoff, terms)


def truncate_polynomial(x: GradedMultiCharacter, slot: str) -> GradedMultiCharacter:
    """Keep exactly the terms whose weight in the slot is polynomial."""
    i = x.profile.index(slot)
    return GradedMultiCharacter.from_terms(
        x.profile, x.cutoff,
        [(degree, key, mult) for degree, key, mult in x.terms() if key[i].is_polynomial]
    )


def restrict_slot(
    x: GradedMultiCharacter,
    slot: str,
    first: Tuple[str, int],
    second: Tuple[str, int]
) -> GradedMultiCharacter:
    """
    Branch one slot GL(a + b) into two slots GL(a) x GL(b) placed where it stood.

    Args:
        x: Character
        slot: Slot to split
        first: (name, rank) of the first new slot
        second: (name, rank) of the second new slot
    """
    i = x.profile.index(slot)
    (name_a, rank_a), (name_b, rank_b) = first, second
    if rank_a + rank_b != x.profile.ranks[i]:
        raise ValueError(
            f"cannot split slot {slot} of rank {x.profile.ranks[i]} into {rank_a} + {rank_b}"
        )
    slots = x.profile.slots
    profile = GroupProfile(slots[:i] + ((name_a, rank_a), (name_b, rank_b)) + slots[i + 1:])

    terms = []
    for degree, key, mult in x.terms():
        for weight_a, weight_b, c in restrict_weight(key[i], rank_a, rank_b):
            new_key = key[:i] + (weight_a, weight_b) + key[i + 1:]
            terms.append((degree, new_key, checked_mul(mult, c)))
    return GradedMultiCharacter.from_terms(profile, x.cutoff, terms)


def forget_slot(x: GradedMultiCharacter, slot: str) -> GradedMultiCharacter:
    """Drop a slot, multiplying each term by the dimension of its weight there."""
    i = x.profile.index(slot)
    terms = [
        (degree, key[:i] + key[i + 1:], checked_mul(mult, weyl_dim(key[i])))
        for degree, key, mult in x.terms()
    ]
    return GradedMultiCharacter.from_terms(x.profile.without(slot), x.cutoff, terms)


def embed_slots(x: GradedMultiCharacter, profile: GroupProfile) -> GradedMultiCharacter:
    """
    Place a character into a larger profile, with trivial weights on the new slots.
    """
    positions = []
    for name, rank in x.profile.slots:
        if profile.rank(name) != rank:
            raise ValueError(f"slot {name} has rank {rank}, target profile has {profile.rank(name)}")
        positions.append(profile.index(name))
    terms = []
    for degree, key, mult in x.terms():
        new_key = list(profile.trivial_key())
        for position, weight in zip(positions, key):
            new_key[position] = weight
        terms.append((degree, tuple(new_key), mult))
    return GradedMultiCharacter.from_terms(profile, x.cutoff, terms)


def koszul_alternating_sum(
    source: str,
    target: str,
    profile: GroupProfile,
    cutoff: int
) -> GradedMultiCharacter:
    """
    Alternating sum of exterior powers times the symmetric algebra on A tensor B.

    By exactness of the Koszul complex this equals the unit.
    """
    name_a, _ = _parse_ref(source)
    name_b, _ = _parse_ref(target)
    top = profile.rank(name_a) * profile.rank(name_b)
    sym = sym_hom_character(source, target, profile, cutoff)
    total = GradedMultiCharacter.zero(profile, cutoff)
    for i in range(min(top, cutoff) + 1):
        exterior = exterior_hom_character(i, source, target, profile, cutoff)
        total = total + multiply(exterior, sym).scaled((-1) ** i)
    return total
