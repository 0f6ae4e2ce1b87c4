"""Benchmark the scan kernel: compiled extension vs pure Python.

Runs the normal-form agreement scan at increasing sizes with both backends
and reports best-of-N wall-clock times and the speedup.  The two backends
are also cross-checked for identical word counts and failure counts at
every size; a mismatch aborts the run.

The pure-Python backend models homeomorphisms with exact rational
arithmetic and is orders of magnitude slower, so the default sizes are
small; pass --sizes to push the compiled backend harder.

Usage: python benchmarks/bench_scan.py [--sizes 3:2,4:2,5:2] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from nearnormal import _scan_py

try:
    from nearnormal import _scan_cy
except ImportError:
    _scan_cy = None


def run(fn, max_len: int, max_index: int, repeat: int):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(max_len, max_index)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser(
        description="Benchmark the normal-form agreement scan backends.")
    ap.add_argument("--sizes", default="3:2,4:2,5:2",
                    help="Comma-separated max_len:max_index pairs.")
    ap.add_argument("--repeat", type=int, default=3,
                    help="Repetitions per measurement (best is reported).")
    args = ap.parse_args()
    sizes = []
    for part in args.sizes.split(","):
        left, _, right = part.partition(":")
        sizes.append((int(left), int(right)))

    print(f"{'size':>8} {'words':>12} {'python':>11} {'compiled':>11} {'speedup':>9}")
    for max_len, max_index in sizes:
        t_py, r_py = run(_scan_py.thompson_agreement_scan,
                         max_len, max_index, args.repeat)
        row = f"{f'{max_len}:{max_index}':>8} {r_py['words']:>12} {t_py:>10.3f}s"
        if _scan_cy is None:
            row += f" {'not built':>11} {'-':>9}"
        else:
            t_cy, r_cy = run(_scan_cy.thompson_agreement_scan,
                             max_len, max_index, args.repeat)
            if (r_cy["words"] != r_py["words"]
                    or len(r_cy["failures"]) != len(r_py["failures"])):
                raise SystemExit(
                    f"backend disagreement at {max_len}:{max_index}: "
                    f"python {r_py['words']}/{len(r_py['failures'])}, "
                    f"compiled {r_cy['words']}/{len(r_cy['failures'])}")
            row += f" {t_cy:>10.3f}s {t_py / t_cy:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
