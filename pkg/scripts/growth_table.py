"""Ball volumes and log-log slopes for O_n*, U_n, PU_n and SU_n.

    python scripts/growth_table.py --n 3 --kmax 64 --window 16 64
"""

import argparse
import csv
import sys

from ostar import cayley


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--kmax", type=int, default=64)
    ap.add_argument("--window", type=int, nargs=2, default=(16, 64))
    ap.add_argument("--groups", nargs="+", default=["ostar", "pun", "sun"])
    args = ap.parse_args()

    series = {}
    for group in args.groups:
        g = cayley.build_graph(group, args.n, args.kmax)
        series[group] = cayley.ball_volumes(g, args.kmax)

    out = csv.writer(sys.stdout)
    out.writerow(["k"] + args.groups)
    for k in range(args.kmax + 1):
        out.writerow([k] + [series[g][k] for g in args.groups])

    kmin, kmax = args.window
    print(file=sys.stderr)
    for group in args.groups:
        fit = cayley.fit_exponent(series[group], kmin, kmax)
        last = max(fit.dyadic)
        print(f"{group:>6}: slope {fit.slope:.4f} on [{kmin},{kmax}], log2(b_{2*last}/b_{last}) {fit.dyadic[last]:.4f}",
              file=sys.stderr)


if __name__ == "__main__":
    main()
