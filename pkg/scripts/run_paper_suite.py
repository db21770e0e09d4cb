#!/usr/bin/env python3
"""Run the full identity suite and dump both the table and a JSON report.

Equivalent to `tornzeta suite --preset paper-full` but also prints per-entry
timing, which is what you want when retuning cutoffs.
"""

import argparse
import sys
import time
from pathlib import Path

from tornzeta.harness import paper_full_manifest, render_reports, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=None)
    ap.add_argument("--parallel", action="store_true")
    ap.add_argument("--json-out", type=Path, default=Path("paper_full_report.json"))
    args = ap.parse_args()

    manifest = paper_full_manifest(args.digits)
    t0 = time.perf_counter()
    reports = run_suite(manifest, parallel=args.parallel)
    total = time.perf_counter() - t0

    print(render_reports(reports, "text"), end="")
    print()
    print(f"{'spec':<18} {'method':<10} {'elapsed':>9}")
    for r in reports:
        print(f"{r.spec.label():<18} {r.oracle.method:<10} {r.oracle.elapsed:>8.2f}s")
    print(f"total wall time {total:.2f}s for {len(reports)} entries")

    args.json_out.write_text(render_reports(reports, "json"))
    print(f"json report -> {args.json_out}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
