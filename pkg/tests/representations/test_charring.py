"""
Tests for the graded character ring.
"""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.modules.combinatorics import Partition
from src.modules.engine.performance import ParallelProcessor
from src.modules.representations import (
    DominantWeight,
    GradedMultiCharacter,
    GroupProfile,
    embed_slots,
    exterior_cauchy,
    exterior_hom_character,
    forget_slot,
    invariant_multiplicity,
    invariant_product,
    koszul_alternating_sum,
    multiply,
    restrict_slot,
    sym_hom_character,
    truncate_polynomial,
    weyl_dim
)
from tests.strategies import dominant_weights


def w(*entries):
    return DominantWeight(tuple(entries))


class TestGroupProfile:
    """Test cases for GroupProfile."""

    def test_flop_profile(self):
        """Test the three-slot profile and its JSON form."""
        profile = GroupProfile.flop(2, 4, 3)
        assert profile.names == ("V", "W", "W'")
        assert profile.ranks == (2, 4, 3)
        assert profile.to_dict() == {"d": 2, "m": 4, "mprime": 3}

    @pytest.mark.parametrize("d,m,mprime", [(0, 1, 1), (2, 1, 2), (2, 2, 1)])
    def test_flop_validation(self, d, m, mprime):
        """Test the standing assumptions on the ranks."""
        with pytest.raises(ValueError):
            GroupProfile.flop(d, m, mprime)

    def test_slot_name_rules(self):
        """Test duplicate and starred slot names."""
        with pytest.raises(ValueError, match="distinct"):
            GroupProfile((("A", 1), ("A", 2)))
        with pytest.raises(ValueError):
            GroupProfile((("A*", 1),))
        with pytest.raises(ValueError):
            GroupProfile((("A", -1),))

    def test_index_and_without(self):
        """Test slot lookup and removal."""
        profile = GroupProfile.of(A=1, B=2)
        assert profile.index("B") == 1
        assert profile.without("A").slots == (("B", 2),)
        with pytest.raises(ValueError, match="unknown slot"):
            profile.index("C")

    def test_key_from_checks_rank(self):
        """Test that slot weights must match the slot rank."""
        profile = GroupProfile.of(A=1, B=2)
        assert profile.key_from({"A": w(3)}) == (w(3), w(0, 0))
        with pytest.raises(ValueError):
            profile.key_from({"B": w(1)})


class TestGradedMultiCharacter:
    """Test cases for GradedMultiCharacter."""

    def setup_method(self):
        """Set up test fixtures."""
        self.profile = GroupProfile.of(A=1, B=2)

    def test_layers_above_cutoff_dropped(self):
        """Test that terms beyond the cutoff are never stored."""
        key = self.profile.trivial_key()
        x = GradedMultiCharacter(self.profile, 2, {1: {key: 1}, 3: {key: 5}, 2: {key: 0}})
        assert x.degrees() == [1]

    def test_negative_cutoff(self):
        """Test that the cutoff must be nonnegative."""
        with pytest.raises(ValueError):
            GradedMultiCharacter.zero(self.profile, -1)

    def test_key_rank_mismatch(self):
        """Test that weight keys must fit the profile."""
        with pytest.raises(ValueError):
            GradedMultiCharacter(self.profile, 1, {0: {(w(0), w(0)): 1}})

    def test_addition_takes_min_cutoff(self):
        """Test addition and cancellation."""
        x = GradedMultiCharacter.unit(self.profile, 3)
        y = GradedMultiCharacter.unit(self.profile, 1)
        total = x + y
        assert total.cutoff == 1
        assert total.layer(0) == {self.profile.trivial_key(): 2}
        assert (x - x).is_zero

    def test_with_cutoff_cannot_extend(self):
        """Test that cutoffs only shrink."""
        x = GradedMultiCharacter.unit(self.profile, 2)
        assert x.with_cutoff(1).cutoff == 1
        with pytest.raises(ValueError):
            x.with_cutoff(3)

    def test_shifted(self):
        """Test moving layers up by an offset."""
        x = GradedMultiCharacter.unit(self.profile, 3).shifted(2)
        assert x.degrees() == [2]
        assert GradedMultiCharacter.unit(self.profile, 3).shifted(4).is_zero

    def test_first_difference(self):
        """Test locating the first disagreeing term."""
        profile = GroupProfile.flop(1, 1, 1)
        unit = GradedMultiCharacter.unit(profile, 2)
        assert unit.first_difference(unit) is None
        assert unit.first_difference(GradedMultiCharacter.zero(profile, 2)) == {
            "degree": 0,
            "weights": {"wV": [0], "wW": [0], "wWp": [0]},
            "left": 1,
            "right": 0
        }

    def test_to_dict(self):
        """Test the JSON form of a character."""
        x = GradedMultiCharacter.single_term(self.profile, 2, 1, {"A": w(1)}, mult=-3)
        assert x.to_dict() == {
            "profile": {"A": 1, "B": 2},
            "cutoff": 2,
            "layers": {"1": [{"wA": [1], "wB": [0, 0], "mult": -3}]}
        }


class TestCauchy:
    """Test cases for symmetric and exterior Cauchy characters."""

    def test_rank_one_sym(self):
        """Test Sym of a product of lines."""
        profile = GroupProfile.of(V=1, W=1)
        x = sym_hom_character("V", "W", profile, 3)
        for k in range(4):
            assert x.layer(k) == {(w(k), w(k)): 1}

    def test_dual_reference(self):
        """Test that a starred slot uses dual weights."""
        profile = GroupProfile.of(V=1, W=1)
        x = sym_hom_character("V*", "W", profile, 2)
        assert x.layer(2) == {(w(-2), w(2)): 1}

    def test_sym_dimensions(self):
        """Test dim Sym^k of a 4-dimensional space."""
        profile = GroupProfile.of(V=2, W=2)
        x = sym_hom_character("V", "W", profile, 4)
        assert [x.dimension(k) for k in range(5)] == [comb(k + 3, 3) for k in range(5)]

    def test_same_slot_tensors(self):
        """Test Sym of A tensor A decomposes inside one slot."""
        profile = GroupProfile.of(A=2)
        x = sym_hom_character("A", "A", profile, 1)
        assert x.layer(1) == {(w(2, 0),): 1, (w(1, 1),): 1}

    def test_exterior_cauchy_pairs(self):
        """Test the exterior Cauchy pieces."""
        pieces = exterior_cauchy(2, 2, 2)
        assert pieces == [
            (Partition.of(2), Partition.of(1, 1)),
            (Partition.of(1, 1), Partition.of(2))
        ]
        with pytest.raises(ValueError):
            exterior_cauchy(5, 2, 2)

    def test_exterior_dimension(self):
        """Test dim of the second exterior power of a 4-dimensional space."""
        profile = GroupProfile.of(V=2, W=2)
        x = exterior_hom_character(2, "V", "W", profile, 4)
        assert x.dimension(2) == 6
        placed = exterior_hom_character(2, "V", "W", profile, 4, degree=0)
        assert placed.degrees() == [0]

    @pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)])
    def test_exterior_dimensions_sum(self, a, b):
        """Test that the Cauchy pieces of every exterior power have total dimension C(ab, i)."""
        for i in range(a * b + 1):
            total = sum(
                weyl_dim(DominantWeight.from_partition(lam, a)) * weyl_dim(DominantWeight.from_partition(lam_t, b))
                for lam, lam_t in exterior_cauchy(i, a, b)
            )
            assert total == comb(a * b, i)

    @pytest.mark.parametrize("a,b", [(1, 2), (2, 2), (2, 3)])
    def test_sym_algebra_dimensions(self, a, b):
        """Test dim Sym^n(A tensor B) = C(ab + n - 1, n)."""
        x = sym_hom_character("A", "B*", GroupProfile.of(A=a, B=b), 5)
        assert [x.dimension(n) for n in range(6)] == [comb(a * b + n - 1, n) for n in range(6)]

    @pytest.mark.parametrize("a,b,cutoff", [
        (1, 1, 3),
        (1, 2, 3),
        (2, 2, 3),
        (2, 1, 8),
        pytest.param(2, 2, 8, marks=pytest.mark.slow)
    ])
    def test_koszul_exactness(self, a, b, cutoff):
        """Test that the Koszul alternating sum is the unit."""
        profile = GroupProfile.of(A=a, B=b)
        total = koszul_alternating_sum("A", "B*", profile, cutoff)
        assert total == GradedMultiCharacter.unit(profile, cutoff)


class TestOperations:
    """Test cases for products, invariants and slot operations."""

    def setup_method(self):
        """Set up test fixtures."""
        self.profile = GroupProfile.of(V=1, W=2)
        self.x = sym_hom_character("V", "W", self.profile, 4)
        self.y = sym_hom_character("V*", "W", self.profile, 4)

    def test_unit_is_neutral(self):
        """Test multiplying by the unit."""
        unit = GradedMultiCharacter.unit(self.profile, 4)
        assert multiply(unit, self.x) == self.x

    def test_parallel_product_matches_serial(self):
        """Test that spreading layers over workers does not change the product."""
        serial = multiply(self.x, self.y)
        parallel = multiply(self.x, self.y, ParallelProcessor(max_workers=2))
        assert serial == parallel

    def test_invariant_product_matches_full_product(self):
        """Test the shortcut against invariants of the full product."""
        expected = invariant_multiplicity(multiply(self.x, self.y), "V")
        assert invariant_product(self.x, self.y, "V") == expected

    def test_invariants_of_sym(self):
        """Test that only degree 0 of Sym(V tensor W) is V-invariant."""
        inv = invariant_multiplicity(self.x, "V")
        assert inv.degrees() == [0]
        assert inv.profile.names == ("W",)

    @pytest.mark.parametrize("d,m,mprime", [(1, 2, 1), (2, 3, 2), (2, 4, 3)])
    def test_first_fundamental_theorem_degree_one(self, d, m, mprime):
        """Test that GL(V)-invariants of the two Hom algebras in degree (1, 1) are W^dual tensor W'."""
        profile = GroupProfile.flop(d, m, mprime)
        x = sym_hom_character("V", "W*", profile, 2)
        y = sym_hom_character("W'", "V*", profile, 2)
        inv = invariant_multiplicity(multiply(x, y), "V")
        assert inv.layer(0) == {(DominantWeight.zero(m), DominantWeight.zero(mprime)): 1}
        assert inv.layer(1) == {}
        dual_w = DominantWeight((0,) * (m - 1) + (-1,))
        standard_wp = DominantWeight((1,) + (0,) * (mprime - 1))
        assert inv.layer(2) == {(dual_w, standard_wp): 1}
        assert inv.dimension(2) == m * mprime

    def test_truncate_polynomial(self):
        """Test dropping non-polynomial weights."""
        assert truncate_polynomial(self.y, "V").degrees() == [0]
        assert truncate_polynomial(self.x, "V") == self.x

    def test_restrict_slot_keeps_dimension(self):
        """Test branching W into two lines."""
        split = restrict_slot(self.x, "W", ("A", 1), ("B", 1))
        assert split.profile.names == ("V", "A", "B")
        for k in range(5):
            assert split.dimension(k) == self.x.dimension(k)
        with pytest.raises(ValueError):
            restrict_slot(self.x, "W", ("A", 1), ("B", 2))

    def test_forget_slot_keeps_dimension(self):
        """Test forgetting a slot."""
        reduced = forget_slot(self.x, "W")
        assert [reduced.dimension(k) for k in range(5)] == [self.x.dimension(k) for k in range(5)]

    def test_embed_slots(self):
        """Test placing a character in a larger profile."""
        bigger = GroupProfile.of(U=3, V=1, W=2)
        embedded = embed_slots(self.x, bigger)
        assert embedded.layer(1) == {(w(0, 0, 0), w(1), w(1, 0)): 1}
        with pytest.raises(ValueError):
            embed_slots(self.x, GroupProfile.of(V=2, W=2))


PROFILE = GroupProfile.of(A=1, B=2)


def characters(low: int = -1, cutoff: int = 3):
    """Small characters over GL(1) x GL(2) with at most three terms."""
    term = st.tuples(
        st.integers(min_value=0, max_value=2),
        dominant_weights(1, low=low, high=1),
        dominant_weights(2, low=low, high=1),
        st.integers(min_value=-2, max_value=2)
    )
    return st.lists(term, max_size=3).map(lambda terms: GradedMultiCharacter.from_terms(
        PROFILE, cutoff, [(degree, (a, b), mult) for degree, a, b, mult in terms]
    ))


class TestProductLaws:
    """Test cases for the algebraic laws of multiply and truncate_polynomial."""

    @given(characters(), characters())
    @settings(max_examples=50, deadline=None)
    def test_multiply_commutative(self, x, y):
        """Test x * y = y * x."""
        assert multiply(x, y) == multiply(y, x)

    @given(characters(), characters(), characters())
    @settings(max_examples=25, deadline=None)
    def test_multiply_associative(self, x, y, z):
        """Test (x * y) * z = x * (y * z)."""
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))

    @given(characters())
    @settings(max_examples=30, deadline=None)
    def test_truncation_idempotent(self, x):
        """Test that truncating twice equals truncating once."""
        once = truncate_polynomial(x, "B")
        assert truncate_polynomial(once, "B") == once
        assert all(key[1].is_polynomial for _, key, _ in once.terms())

    @given(characters(), characters())
    @settings(max_examples=30, deadline=None)
    def test_truncation_additive(self, x, y):
        """Test that truncation distributes over sums."""
        assert truncate_polynomial(x + y, "B") == truncate_polynomial(x, "B") + truncate_polynomial(y, "B")

    @given(characters(low=0), characters(low=0))
    @settings(max_examples=30, deadline=None)
    def test_truncation_commutes_with_polynomial_products(self, x, y):
        """Test that truncating a product of polynomial factors changes nothing."""
        product = multiply(x, y)
        truncated = multiply(truncate_polynomial(x, "B"), truncate_polynomial(y, "B"))
        assert truncate_polynomial(product, "B") == truncated
        assert truncate_polynomial(product, "B") == product

    def test_truncation_keeps_trivial_summand(self):
        """Test that V tensor V^dual keeps only the trivial summand."""
        profile = GroupProfile.of(V=2)
        standard = GradedMultiCharacter.single_term(profile, 0, 0, {"V": w(1, 0)})
        dual = GradedMultiCharacter.single_term(profile, 0, 0, {"V": w(0, -1)})
        product = multiply(standard, dual)
        assert product.layer(0) == {(w(1, -1),): 1, (w(0, 0),): 1}
        assert truncate_polynomial(product, "V").layer(0) == {(w(0, 0),): 1}
