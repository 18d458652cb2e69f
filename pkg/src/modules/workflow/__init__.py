"""
Workflow Module

Verification suites and the report they produce.
"""

from .report import VerificationReport
from .suites import ALL_SUITE, SUITE_NAMES, SUITES, negative_control, run_suite

__all__ = [
    'VerificationReport',
    'ALL_SUITE',
    'SUITE_NAMES',
    'SUITES',
    'negative_control',
    'run_suite'
]
