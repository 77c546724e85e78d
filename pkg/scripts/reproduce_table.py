"""Recompute the bundled table of non-arithmetic lattices and report mismatches.

    python scripts/reproduce_table.py [--format csv]
"""

import sys

from dmspectrum.cli import main

if __name__ == "__main__":
    sys.exit(main(["table", *sys.argv[1:]]))
