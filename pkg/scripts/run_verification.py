#!/usr/bin/env python3
"""Run the whole default verification battery and print one line per suite.

Exit status is nonzero when any verified identity fails, so this doubles as
a CI gate.  Individual suites are also reachable through the CLI
(``chromatic-schur net-rec`` and friends) with JSON/CSV output.
"""

import argparse
import sys

from chromatic_schur.graphs import BODY_ROLES, PENDANT_ROLES, generalized_net
from chromatic_schur.verify import (
    run_cancellation_check,
    run_f_table_suite,
    run_net_recurrence_suite,
    run_open_coefficient_report,
    run_positivity_sweep,
    run_singleton_removal_suite,
    run_spider_recurrence_suite,
    run_structure_suite,
)


def scaled_cancellation_reports():
    reports = []
    for n, lam in ((3, (2, 1, 1, 1, 1)), (4, (2, 1, 1, 1, 1, 1, 1))):
        graph = generalized_net(n, n, "pendant_first")
        reports.append(
            run_cancellation_check(
                graph,
                lam,
                frozenset(graph.labels_with_role(*PENDANT_ROLES)),
                frozenset(graph.labels_with_role(*BODY_ROLES)),
                label=f"GN({n},{n})",
            )
        )
    return reports


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--net-n-max", type=int, default=4)
    parser.add_argument("--spider-n-max", type=int, default=3)
    parser.add_argument("--structure-bound", type=int, default=8)
    parser.add_argument("--singleton-bound", type=int, default=5)
    parser.add_argument("--f-bound", type=int, default=6)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args(argv)

    reports = [
        run_net_recurrence_suite(args.net_n_max, jobs=args.jobs),
        run_spider_recurrence_suite(args.spider_n_max, jobs=args.jobs),
        run_structure_suite(args.structure_bound, jobs=args.jobs),
        run_singleton_removal_suite(args.singleton_bound, jobs=args.jobs),
        run_positivity_sweep(args.net_n_max, jobs=args.jobs),
        run_f_table_suite(args.f_bound, jobs=args.jobs),
        run_open_coefficient_report(3, jobs=args.jobs),
    ]
    reports += scaled_cancellation_reports()

    worst = 0
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{report.statement_id:<28} {status}  "
            f"instances={report.instances_checked}  time={report.wall_time_ms}ms"
        )
        for failure in report.failures:
            print(f"    failure: {failure}")
        if not report.passed:
            worst = 1
    return worst


if __name__ == "__main__":
    sys.exit(main())
