#!/usr/bin/env python3
"""
Main entry point for grassflop.

Runs one batch command: an enumeration (kapranov, ext-table, bwb, lr,
ds-complex, generate) or a verification suite (verify <suite>), and exits
with 0 when every check passes, 1 when a check fails and 2 on usage errors.
"""

import sys

from src.modules.cli import run


def main() -> int:
    """Run the command given on the command line."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
