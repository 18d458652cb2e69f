"""
CLI Utilities

Status updates, error handling and message helpers. Everything here writes to
standard error; standard output is reserved for reports.
"""

import argparse
import sys
import time
from typing import List, Optional, Tuple

from ..utils.constants import EXIT_CHECK_FAILED, EXIT_USAGE

SYMBOLS = {
    "info": "ℹ",
    "success": "✓",
    "warning": "⚠",
    "error": "✗"
}


def _emit(message: str) -> None:
    print(message, file=sys.stderr)


class StatusUpdater:
    """Provides status updates."""

    def __init__(self, quiet: bool = False):
        """
        Initialize status updater.

        Args:
            quiet: Record history without printing
        """
        self.current_status: Optional[str] = None
        self.status_history: List[Tuple[float, str, str]] = []
        self.quiet = quiet

    def update(self, status: str, level: str = "info"):
        """
        Update status.

        Args:
            status: Status message
            level: Status level (info, success, warning, error)
        """
        self.current_status = status
        self.status_history.append((time.time(), level, status))
        if not self.quiet:
            _emit(f"{SYMBOLS.get(level, '•')} {status}")

    def clear(self):
        """Clear current status."""
        self.current_status = None


class ErrorHandler:
    """Maps exceptions to messages and exit codes."""

    @staticmethod
    def exit_code_for(error: BaseException) -> int:
        """Usage and validation errors exit with 2; anything else with 1."""
        if isinstance(error, (ValueError, argparse.ArgumentError)):
            return EXIT_USAGE
        return EXIT_CHECK_FAILED

    @staticmethod
    def handle_error(error: BaseException, context: str = "") -> int:
        """
        Report an error on standard error.

        Args:
            error: Exception that occurred
            context: Context description

        Returns:
            Exit code for the error
        """
        prefix = f"Error {context}: " if context else "Error: "
        print_error(f"{prefix}{error}")
        return ErrorHandler.exit_code_for(error)


def print_error(message: str):
    """Print error message."""
    _emit(f"✗ {message}")


def print_warning(message: str):
    """Print warning message."""
    _emit(f"⚠ {message}")


def print_info(message: str):
    """Print info message."""
    _emit(f"ℹ {message}")
