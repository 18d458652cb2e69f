"""
Tests for CheckResult.
"""

from src.modules.utils import CheckResult


class TestCheckResult:
    """Test cases for CheckResult class."""

    def test_defaults(self):
        """Test a passing result."""
        result = CheckResult("anchors")
        assert result.passed
        assert result.to_dict() == {"name": "anchors", "params": {}, "pass": True, "first_failure": None}

    def test_failure(self):
        """Test the failure builder."""
        result = CheckResult.failure("ds_euler", {"d": 2}, {"degree": 1}, {"K": 1})
        assert not result.passed
        assert result.to_dict() == {
            "name": "ds_euler",
            "params": {"d": 2},
            "pass": False,
            "first_failure": {"degree": 1},
            "details": {"K": 1}
        }

    def test_details_omitted_when_empty(self):
        """Test that empty details are left out of the dictionary."""
        assert "details" not in CheckResult.failure("x", {}, {"a": 1}).to_dict()
