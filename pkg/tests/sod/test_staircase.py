"""
Tests for staircase complexes and their Euler characteristics.
"""

import pytest

from src.modules.combinatorics import Partition, enumerate_box
from src.modules.representations import DominantWeight
from src.modules.sod import (
    DSComplexSpec,
    ds_free_character,
    ds_staircase,
    hstar_euler_character,
    pushforward_terms,
    schur_weight,
    verify_ds_euler
)


def terms_of(spec: DSComplexSpec):
    return [(diagram.parts, s) for diagram, s in spec.terms]


class TestSchurWeight:
    """Test cases for label conversion."""

    def test_full_row_is_determinant(self):
        """Test that a full row of length d is one determinant power."""
        assert schur_weight(Partition.of(2), 2) == DominantWeight((1, 1))
        assert schur_weight(Partition.of(1, 1), 2) == DominantWeight((2, 0))

    def test_too_wide(self):
        """Test that labels must fit the rank."""
        with pytest.raises(ValueError):
            schur_weight(Partition.of(3), 2)


class TestDsStaircase:
    """Test cases for the staircase construction."""

    def test_empty_label(self):
        """Test the staircase of the empty label for d = 2, mprime = 2."""
        spec = ds_staircase(Partition(), 2, 2)
        assert terms_of(spec) == [((), 0), ((2,), 2)]
        assert spec.K == 1

    def test_single_box(self):
        """Test the staircase of (1) for d = 2, mprime = 3."""
        spec = ds_staircase(Partition.of(1), 2, 3)
        assert terms_of(spec) == [((1,), 0), ((2,), 1), ((2, 2), 3)]

    def test_rank_one(self):
        """Test that d = 1 gives one term per exterior power."""
        spec = ds_staircase(Partition(), 1, 3)
        assert terms_of(spec) == [((), 0), ((1,), 1), ((1, 1), 2), ((1, 1, 1), 3)]

    @pytest.mark.parametrize("delta,d,mprime", [
        (Partition(), 0, 1),
        (Partition(), 2, 1),
        (Partition.of(2), 2, 3)
    ])
    def test_validation(self, delta, d, mprime):
        """Test the input checks."""
        with pytest.raises(ValueError):
            ds_staircase(delta, d, mprime)

    def test_degrees_increase(self):
        """Test that s_k strictly increases and stays within mprime."""
        spec = ds_staircase(Partition.of(2, 1), 3, 5)
        degrees = [s for _, s in spec.terms]
        assert degrees == sorted(set(degrees))
        assert degrees[-1] <= 5

    @pytest.mark.parametrize("d,mprime", [(d, mprime) for d in range(1, 4) for mprime in range(d, 6)])
    def test_terminates_on_grid(self, d, mprime):
        """Test the shape of every staircase for d <= 3 and mprime <= 5."""
        for delta in enumerate_box(3, d - 1):
            spec = ds_staircase(delta, d, mprime)
            assert spec.terms[0] == (delta, 0)
            degrees = [s for _, s in spec.terms]
            assert degrees == sorted(set(degrees))
            assert degrees[-1] <= mprime
            for (smaller, _), (larger, s) in zip(spec.terms, spec.terms[1:]):
                assert larger.contains(smaller)
                assert larger.size - delta.size == s

    def test_shifted_term(self):
        """Test moving one term and the index bound."""
        spec = ds_staircase(Partition(), 2, 2)
        moved = spec.with_shifted_term(1, 1)
        assert terms_of(moved) == [((), 0), ((2,), 3)]
        with pytest.raises(ValueError):
            spec.with_shifted_term(2, 1)

    def test_to_dict(self):
        """Test the JSON form."""
        assert ds_staircase(Partition(), 2, 2).to_dict() == {
            "delta": [],
            "d": 2,
            "mprime": 2,
            "K": 1,
            "terms": [{"delta": [], "s": 0}, {"delta": [2], "s": 2}]
        }


class TestEulerCharacteristics:
    """Test cases for both sides of the staircase identity."""

    def test_pushforward_terms(self):
        """Test the pushforward of a single label over P^1."""
        found = pushforward_terms(DominantWeight((-1,)), 2, 2, 1)
        assert found == [
            (0, 0, DominantWeight((0, -1)), DominantWeight((0, 0)), 1),
            (0, 1, DominantWeight((0, -2)), DominantWeight((1, 0)), 1)
        ]

    def test_hstar_needs_narrow_label(self):
        """Test that labels must have width at most d - 1."""
        with pytest.raises(ValueError):
            hstar_euler_character(Partition.of(2), 2, 2, 2, 2)

    def test_free_character_degree_zero(self):
        """Test that degree 0 of the free side is the label term alone."""
        spec = ds_staircase(Partition.of(1), 2, 2)
        free = ds_free_character(spec, 2, 2)
        assert free.layer(0) == {
            (DominantWeight((0, -1)), DominantWeight((0, 0)), DominantWeight((0, 0))): 1
        }

    @pytest.mark.parametrize("delta,d,m,mprime,cutoff", [
        (Partition(), 1, 1, 1, 3),
        (Partition(), 1, 2, 2, 3),
        (Partition(), 2, 2, 2, 3),
        (Partition.of(1), 2, 2, 2, 3),
        (Partition.of(1), 2, 3, 3, 2)
    ])
    def test_euler_identity(self, delta, d, m, mprime, cutoff):
        """Test the staircase Euler identity."""
        result = verify_ds_euler(delta, d, m, mprime, cutoff)
        assert result.passed, result.first_failure
        assert result.details["K"] == ds_staircase(delta, d, mprime).K

    def test_mutated_complex_fails(self):
        """Test that moving s_1 by one breaks the identity."""
        spec = ds_staircase(Partition.of(1), 2, 2).with_shifted_term(1, 1)
        result = verify_ds_euler(Partition.of(1), 2, 2, 2, 3, complex_spec=spec)
        assert not result.passed
        assert result.first_failure["degree"] == 1

    @pytest.mark.slow
    @pytest.mark.parametrize("d,mprime", [(d, mprime) for d in range(1, 4) for mprime in range(d, 6)])
    def test_euler_identity_on_grid(self, d, mprime):
        """Test the identity for every narrow label on the d <= 3, mprime <= 5 grid."""
        for delta in enumerate_box(2, d - 1):
            result = verify_ds_euler(delta, d, mprime, mprime, cutoff=2)
            assert result.passed, result.first_failure

    @pytest.mark.parametrize("d,m,mprime", [(1, 3, 2), (2, 4, 3), (2, 4, 2)])
    def test_euler_identity_at_cutoff_four(self, d, m, mprime):
        """Test the labels [], [1] and [1,1] that fit below d at cutoff 4."""
        for delta in (Partition(), Partition.of(1), Partition.of(1, 1)):
            if delta.width >= d:
                continue
            result = verify_ds_euler(delta, d, m, mprime, cutoff=4)
            assert result.passed, result.first_failure

    @pytest.mark.parametrize("delta", [Partition(), Partition.of(1), Partition.of(1, 1)])
    def test_every_shifted_term_fails(self, delta):
        """Test that moving any single s_k by one is detected on (2, 4, 3)."""
        spec = ds_staircase(delta, 2, 3)
        for k in range(spec.K + 1):
            result = verify_ds_euler(delta, 2, 4, 3, 4, complex_spec=spec.with_shifted_term(k, 1))
            assert not result.passed, k
