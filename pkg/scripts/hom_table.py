"""Ranks of the P, E and N spans for n = 1..4 and k + l <= 8."""

import argparse

from ostar.tensor_maps import hom_dim


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-points", type=int, default=8)
    ap.add_argument("--nmax", type=int, default=4)
    args = ap.parse_args()
    print("n  k+l    P    E    N")
    for n in range(1, args.nmax + 1):
        for total in range(0, args.max_points + 1, 2):
            if n**total > 10**7:
                continue
            ranks = [hom_dim(n, 0, total, c).rank for c in "PEN"]
            print(f"{n}  {total:>3} " + " ".join(f"{r:>4}" for r in ranks))


if __name__ == "__main__":
    main()
