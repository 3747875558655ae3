#!/usr/bin/env python3
"""Tabulate the three spider coefficient families that the recurrence cannot
reach, as far as the budget allows.

These values are conjectured nonnegative but unproven; the table flags any
negative entry loudly since it would settle the conjecture in the negative.
"""

import argparse
import sys

from chromatic_schur.verify import run_open_coefficient_report


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=4)
    parser.add_argument(
        "--budget-ms",
        type=int,
        default=30_000,
        help="nominal cost allowance; raise to unlock larger instances",
    )
    args = parser.parse_args(argv)

    report = run_open_coefficient_report(args.n_max, budget_ms=args.budget_ms)
    print(f"{'family':<18} {'n':>3} {'shape':<22} {'graph':<16} value")
    for inst in report.instances:
        p = inst["params"]
        if inst["status"] == "skip":
            print(f"{p['family']:<18} {p['n']:>3} {str(p['lambda']):<22} {p['graph']:<16} (skipped: {inst['reason']})")
            continue
        flag = "  <-- NEGATIVE (conjecture counterexample!)" if inst["negative"] else ""
        print(f"{p['family']:<18} {p['n']:>3} {str(p['lambda']):<22} {p['graph']:<16} {inst['value']}{flag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
