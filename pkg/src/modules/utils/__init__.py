"""
Shared Utilities Module

Provides constants, configuration, check results and JSON helpers used across modules.
"""

from .json_utils import dumps_deterministic, load_structured_file
from .check_result import CheckResult
from .config import RunConfig, default_cutoff, default_seed
from .constants import (
    DEFAULT_CUTOFF,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DEFAULT_OUTPUT_DIR,
    SUPPORTED_OUTPUT_FORMATS,
    SUPPORTED_CONFIG_FORMATS
)

__all__ = [
    'dumps_deterministic',
    'load_structured_file',
    'CheckResult',
    'RunConfig',
    'default_cutoff',
    'default_seed',
    'DEFAULT_CUTOFF',
    'DEFAULT_SEED',
    'DEFAULT_TRIALS',
    'DEFAULT_OUTPUT_DIR',
    'SUPPORTED_OUTPUT_FORMATS',
    'SUPPORTED_CONFIG_FORMATS'
]
