"""How often does a diagram outside a smaller class have a capping that stays outside?

For each number of strings s, count p in P-E with some capping in P-E, and
p in E-N with some capping in E-N.  Small s shows where the descent breaks.
"""

import argparse

from ostar import diagrams as D


def survey(s):
    rows = {"P-E": [0, 0], "E-N": [0, 0]}
    for k in range(2 * s + 1):
        for p in D.enumerate_pairings(k, 2 * s - k, "P"):
            c = D.classify(p)
            key = {"P_only": "P-E", "E_not_N": "E-N"}.get(c.value)
            if key is None:
                continue
            rows[key][1] += 1
            if any(D.classify(q) is c for q in D.cappings(p)):
                rows[key][0] += 1
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--smax", type=int, default=5)
    args = ap.parse_args()
    print("s  P-E descends   E-N descends")
    for s in range(1, args.smax + 1):
        r = survey(s)
        print(f"{s}  {r['P-E'][0]:>5}/{r['P-E'][1]:<6}  {r['E-N'][0]:>5}/{r['E-N'][1]}")


if __name__ == "__main__":
    main()
