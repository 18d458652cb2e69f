"""
Run Configuration

Resolves run parameters from defaults, environment, config files and flags.
"""

import os
from dataclasses import dataclass, asdict, fields
from typing import Any, Dict, Mapping, Optional

from dotenv import load_dotenv

from .constants import (
    CUTOFF_ENV_VAR,
    DEFAULT_CUTOFF,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    SEED_ENV_VAR,
    SUPPORTED_OUTPUT_FORMATS
)
from .json_utils import load_structured_file

# Load environment variables from .env file
load_dotenv()


def _int_from_env(name: str, fallback: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return fallback
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"environment variable {name} must be an integer, got '{raw}'") from e


def default_cutoff() -> int:
    """Default degree cutoff, overridable through the environment."""
    return _int_from_env(CUTOFF_ENV_VAR, DEFAULT_CUTOFF)


def default_seed() -> int:
    """Default seed for the specialization oracles."""
    return _int_from_env(SEED_ENV_VAR, DEFAULT_SEED)


@dataclass
class RunConfig:
    """Parameters shared by every subcommand."""
    d: int = 1
    m: Optional[int] = None
    mprime: Optional[int] = None
    cutoff: Optional[int] = None
    format: str = "json"
    seed: Optional[int] = None
    parallelism: int = 1
    trials: int = DEFAULT_TRIALS

    def __post_init__(self):
        if self.m is None:
            self.m = self.d
        if self.mprime is None:
            self.mprime = self.d
        if self.cutoff is None:
            self.cutoff = default_cutoff()
        if self.seed is None:
            self.seed = default_seed()

    def validate(self) -> "RunConfig":
        """
        Check the standing assumptions on the parameters.

        Returns:
            self, for chaining

        Raises:
            ValueError: If any parameter is out of range
        """
        for name in ("d", "m", "mprime", "cutoff", "seed", "parallelism", "trials"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.m < self.d:
            raise ValueError(f"m must be >= d, got m={self.m}, d={self.d}")
        if self.mprime < self.d:
            raise ValueError(f"mprime must be >= d, got mprime={self.mprime}, d={self.d}")
        if self.cutoff < 0:
            raise ValueError(f"cutoff must be >= 0, got {self.cutoff}")
        if self.parallelism < 0:
            raise ValueError(f"parallelism must be >= 0, got {self.parallelism}")
        if self.trials < 0:
            raise ValueError(f"trials must be >= 0, got {self.trials}")
        if self.format not in SUPPORTED_OUTPUT_FORMATS:
            raise ValueError(
                f"format must be one of {', '.join(SUPPORTED_OUTPUT_FORMATS)}, got '{self.format}'"
            )
        return self

    def require_flip(self) -> None:
        """Reject parameters that do not describe a flip (m >= mprime)."""
        if self.m < self.mprime:
            raise ValueError(
                f"m must be >= mprime for the flip orientation, got m={self.m}, mprime={self.mprime}"
            )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)

    @classmethod
    def from_sources(
        cls,
        overrides: Mapping[str, Any],
        config_path: Optional[str] = None
    ) -> "RunConfig":
        """
        Build a validated config.

        Precedence, lowest first: built-in defaults and environment, config
        file, explicit overrides. Overrides equal to None are ignored.

        Args:
            overrides: Values given on the command line
            config_path: Optional YAML or JSON file

        Returns:
            Validated RunConfig

        Raises:
            ValueError: On unknown config keys or invalid values
        """
        known = {f.name for f in fields(cls)}
        values: Dict[str, Any] = {}

        if config_path:
            file_values = load_structured_file(config_path)
            unknown = sorted(set(file_values) - known)
            if unknown:
                raise ValueError(f"unknown config keys: {', '.join(unknown)}")
            values.update(file_values)

        for key, value in overrides.items():
            if key in known and value is not None:
                values[key] = value

        return cls(**values).validate()
