"""Write DOT files for small balls of the O_3*, PU_3, SU_3 and U_3 graphs.

Render with e.g. ``dot -Tsvg figures/ostar_3.dot -o ostar_3.svg``.
"""

import argparse
from pathlib import Path

from ostar import cayley

RADII = {"ostar": 4, "pun": 2, "sun": 3, "un": 2}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="figures")
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(exist_ok=True)
    for group, radius in RADII.items():
        g = cayley.build_graph(group, args.n, radius)
        path = out / f"{group}_{args.n}.dot"
        path.write_text(g.to_dot())
        print(f"{path}: {len(g.vertices)} vertices, {len(g.edges)} edges")
    collapsed = cayley.projective_collapse(cayley.build_graph("ostar", args.n, 2 * RADII["pun"]))
    (out / f"pun_{args.n}_from_ostar.dot").write_text(collapsed.to_dot())


if __name__ == "__main__":
    main()
