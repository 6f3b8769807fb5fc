"""Run every acceptance criterion and print a table with timings."""

import argparse
import sys

from ostar import verify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--only", type=int, nargs="*")
    args = ap.parse_args()
    numbers = args.only or verify.TIERS["full"]
    results = [verify.run_check(i, args.seed) for i in numbers]
    sys.stdout.write(verify.render(results, timings=True))
    sys.exit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
