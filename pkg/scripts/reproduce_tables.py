#!/usr/bin/env python3
"""Rebuild every bundled reference table and print printed-vs-recomputed lines.

One line per table row: the printed parameters, the recomputed length and
maximal dimension, the verdict, and the verification level.  Pass table ids
to restrict the run, e.g.::

    python3 scripts/reproduce_tables.py 1 3 6
    python3 scripts/reproduce_tables.py --condition-only
"""

import argparse
import sys

from qmds.audit import audit_tables


def _fmt_printed(printed: dict) -> str:
    parts = []
    for key in ("code", "n", "n_factors", "sub", "q", "h", "m", "m1", "m2",
                "a", "b", "c", "kk", "m_even", "m_odd", "k", "k_max",
                "d_max"):
        if key in printed:
            parts.append(f"{key}={printed[key]}")
    return " ".join(parts)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("tables", nargs="*", type=int,
                        help="table ids to reproduce (default: all nine)")
    parser.add_argument("--condition-only", action="store_true",
                        help="skip matrix-level verification")
    args = parser.parse_args(argv)

    report = audit_tables(tuple(args.tables) or None,
                          full=not args.condition_only)
    for row in report.rows:
        rec = row.recomputed
        recomputed = " ".join(f"{k}={rec[k]}" for k in sorted(rec))
        print(f"table {row.table} row {row.row} [{row.construction}] "
              f"{row.verdict} ({row.level})")
        print(f"  printed:    {_fmt_printed(row.printed)}")
        print(f"  recomputed: {recomputed}")
        for note in row.notes:
            print(f"  note: {note}")
    for fam in report.families:
        print(f"summary row {fam.row} [{fam.family}] {fam.status}")
        for inst in fam.instances:
            print(f"  instance: {inst}")
        for note in fam.notes:
            print(f"  note: {note}")
    summary = report.summary()
    print(", ".join(f"{k}={v}" for k, v in summary.items()))
    return 1 if report.has_hypothesis_fail else 0


if __name__ == "__main__":
    sys.exit(main())
