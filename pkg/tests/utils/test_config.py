"""
Tests for run configuration.
"""

import json

import pytest

from src.modules.utils import RunConfig, default_cutoff, default_seed
from src.modules.utils.constants import CUTOFF_ENV_VAR, SEED_ENV_VAR


class TestDefaults:
    """Test cases for environment-backed defaults."""

    def test_builtin_defaults(self):
        """Test the built-in cutoff and seed."""
        assert default_cutoff() == 6
        assert default_seed() == 0

    def test_environment_override(self, monkeypatch):
        """Test reading the cutoff from the environment."""
        monkeypatch.setenv(CUTOFF_ENV_VAR, "4")
        assert default_cutoff() == 4
        assert RunConfig().cutoff == 4

    def test_blank_environment_ignored(self, monkeypatch):
        """Test that an empty variable falls back to the default."""
        monkeypatch.setenv(SEED_ENV_VAR, "  ")
        assert default_seed() == 0

    def test_bad_environment_value(self, monkeypatch):
        """Test that a non-integer variable is rejected."""
        monkeypatch.setenv(CUTOFF_ENV_VAR, "six")
        with pytest.raises(ValueError, match=CUTOFF_ENV_VAR):
            default_cutoff()


class TestRunConfig:
    """Test cases for RunConfig class."""

    def test_ranks_default_to_d(self):
        """Test that m and mprime default to d."""
        cfg = RunConfig(d=2)
        assert (cfg.m, cfg.mprime, cfg.cutoff, cfg.seed) == (2, 2, 6, 0)

    @pytest.mark.parametrize("overrides", [
        {"d": 0},
        {"d": 2, "m": 1},
        {"d": 2, "mprime": 1},
        {"cutoff": -1},
        {"parallelism": -1},
        {"trials": -1},
        {"format": "xml"},
        {"d": "2"},
        {"d": True}
    ])
    def test_validation(self, overrides):
        """Test rejection of out-of-range values."""
        with pytest.raises(ValueError):
            RunConfig(**overrides).validate()

    def test_validate_returns_self(self):
        """Test chaining."""
        cfg = RunConfig(d=1, m=3, mprime=2)
        assert cfg.validate() is cfg

    def test_require_flip(self):
        """Test the flip orientation m >= mprime."""
        RunConfig(d=1, m=3, mprime=2).require_flip()
        with pytest.raises(ValueError, match="flip"):
            RunConfig(d=1, m=2, mprime=3).require_flip()

    def test_to_dict(self):
        """Test dictionary conversion."""
        data = RunConfig(d=1, m=2, mprime=1, cutoff=3).to_dict()
        assert data["d"] == 1 and data["cutoff"] == 3 and data["format"] == "json"


class TestFromSources:
    """Test cases for layered configuration."""

    def test_overrides_only(self):
        """Test building from flags alone; None values are ignored."""
        cfg = RunConfig.from_sources({"d": 2, "m": 4, "mprime": None, "cutoff": 3})
        assert (cfg.d, cfg.m, cfg.mprime, cfg.cutoff) == (2, 4, 2, 3)

    def test_yaml_file(self, tmp_path):
        """Test defaults from a YAML file."""
        path = tmp_path / "run.yaml"
        path.write_text("d: 2\nm: 4\nmprime: 3\ncutoff: 2\nformat: table\n", encoding="utf-8")
        cfg = RunConfig.from_sources({}, str(path))
        assert (cfg.d, cfg.m, cfg.mprime, cfg.cutoff, cfg.format) == (2, 4, 3, 2, "table")

    def test_flags_win_over_file(self, tmp_path):
        """Test precedence of explicit overrides."""
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"d": 1, "m": 3, "cutoff": 5}), encoding="utf-8")
        cfg = RunConfig.from_sources({"cutoff": 2}, str(path))
        assert cfg.cutoff == 2
        assert cfg.m == 3

    def test_unknown_keys(self, tmp_path):
        """Test that unknown config keys are rejected."""
        path = tmp_path / "run.yaml"
        path.write_text("d: 1\nwidth: 3\n", encoding="utf-8")
        with pytest.raises(ValueError, match="width"):
            RunConfig.from_sources({}, str(path))

    def test_invalid_values_from_file(self, tmp_path):
        """Test that file values are validated."""
        path = tmp_path / "run.yml"
        path.write_text("d: 3\nm: 2\n", encoding="utf-8")
        with pytest.raises(ValueError):
            RunConfig.from_sources({}, str(path))
