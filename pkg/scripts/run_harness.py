"""Exhaustive equivalence run: oracle k-colorability vs. the homomorphism pipeline.

    python scripts/run_harness.py --nmax 5 --kmax 5 --csv harness.csv
"""

import argparse
import collections
import time

from raagcolor.reduction import CSV_HEADER, HarnessConfig, equivalence_harness


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=5)
    ap.add_argument("--kmin", type=int, default=1)
    ap.add_argument("--kmax", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--all-sizes", action="store_true")
    ap.add_argument("--csv")
    args = ap.parse_args()

    cfg = HarnessConfig(n_max=args.nmax, k_min=args.kmin, k_max=args.kmax,
                        include_smaller=args.all_sizes, workers=args.workers)
    start = time.perf_counter()
    reports = equivalence_harness(config=cfg)
    elapsed = time.perf_counter() - start

    colorable = collections.Counter((r.k, r.oracle_colorable) for r in reports)
    for k in range(cfg.k_min, cfg.k_max + 1):
        print(f"k={k}: {colorable[k, True]} colorable, {colorable[k, False]} not")
    bad = [r for r in reports if not r.agrees]
    print(f"{len(reports)} cases in {elapsed:.1f}s, counterexamples: {len(bad)}")
    for r in bad:
        print("  ", r)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(CSV_HEADER + "\n")
            fh.writelines(r.csv_row() + "\n" for r in reports)


if __name__ == "__main__":
    main()
