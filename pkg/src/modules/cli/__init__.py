"""
CLI Module

Command-line entry point and console helpers.
"""

from .cli_utils import (
    StatusUpdater,
    ErrorHandler,
    print_error,
    print_warning,
    print_info
)
from .commands import build_parser, parse_int_list, parse_partition, run

__all__ = [
    'StatusUpdater',
    'ErrorHandler',
    'print_error',
    'print_warning',
    'print_info',
    'build_parser',
    'parse_int_list',
    'parse_partition',
    'run'
]
