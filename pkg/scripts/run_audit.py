#!/usr/bin/env python3
"""Run the full reference-table audit and print the human-readable report.

Any extra arguments are forwarded to the ``audit`` subcommand, e.g.::

    python3 scripts/run_audit.py --tables 1,3
    python3 scripts/run_audit.py --condition-only

Exit status 1 signals at least one HYPOTHESIS_FAIL row.
"""

import sys

from qmds.cli import main

if __name__ == "__main__":
    sys.exit(main(["audit", "--format", "text", *sys.argv[1:]]))
