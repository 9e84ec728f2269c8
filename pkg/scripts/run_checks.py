#!/usr/bin/env python3
"""Depth sweep over the verification suites.

Runs each suite at increasing bounds and tabulates cases checked and wall
time, so the cost of pushing the exhaustive windows further is visible.
"""

import argparse
import json
import sys
import time

from commagraph import verify


def timed(fn):
    start = time.perf_counter()
    report = fn()
    return report, time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-unit-iso", type=int, default=5, help="deepest unit-iso vertex bound")
    parser.add_argument("--max-word-len", type=int, default=7, help="deepest exhaustive word length")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--json", action="store_true", help="emit the reports as JSON")
    args = parser.parse_args()

    rows = []
    for bound in range(1, args.max_unit_iso + 1):
        report, elapsed = timed(lambda b=bound: verify.check_unit_iso(b))
        rows.append((f"unit-iso <= {bound}", report, elapsed))
    for bound in range(1, 4):
        report, elapsed = timed(lambda b=bound: verify.check_fullness(b))
        rows.append((f"fullness <= {bound}", report, elapsed))
    report, elapsed = timed(lambda: verify.check_ac_bijection(3))
    rows.append(("ac-bijection <= 3", report, elapsed))
    report, elapsed = timed(lambda: verify.check_dvi(3, 3))
    rows.append(("dvi <= 3", report, elapsed))
    report, elapsed = timed(lambda: verify.check_couniversal(verify.default_pool(args.seed), 3))
    rows.append(("couniversal <= 3", report, elapsed))
    report, elapsed = timed(lambda: verify.check_group_reflection(verify.default_pool(args.seed)))
    rows.append(("group-reflection", report, elapsed))
    for length in range(4, args.max_word_len + 1):
        report, elapsed = timed(
            lambda n=length: verify.check_word_differential(3, n, random_words=0)
        )
        rows.append((f"word-differential len <= {length}", report, elapsed))

    if args.json:
        print(json.dumps([r.to_json() for _, r, _ in rows], indent=2))
    else:
        width = max(len(name) for name, _, _ in rows)
        for name, report, elapsed in rows:
            status = "ok " if report.passed else "FAIL"
            print(f"{name:<{width}}  {status}  {report.cases_checked:>9} cases  {elapsed:8.2f}s")
    return 0 if all(r.passed for _, r, _ in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
