"""Command line entry point: ``ostar <subcommand> ...``.

Exit status is 0 on success, 1 when a check fails or an input is rejected,
and 2 on usage errors.  Every JSON document carries the tool version and the
run configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cayley, diagrams, fusion, tensor_maps, verify, weights
from .config import MembershipError, ResourceLimitError, RunConfig, __version__
from .weights import GroupElement


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(payload: dict, config: RunConfig, out=None) -> None:
    doc = {"version": __version__, "config": config.to_dict(), **payload}
    text = json.dumps(doc, sort_keys=True, ensure_ascii=False)
    if out is None:
        print(text)
    else:
        Path(out).write_text(text + "\n")


def _pretty(rows: list[tuple[str, object]]) -> None:
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")


def _config(args: argparse.Namespace) -> RunConfig:
    skip = {"func", "command", "seed", "pretty"}
    params = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    return RunConfig(command=args.command, params=params, seed=getattr(args, "seed", 0))


# --- subcommands ----------------------------------------------------------------


def cmd_diagrams(args: argparse.Namespace) -> int:
    config = _config(args)
    found = diagrams.enumerate_pairings(args.k, args.l, args.cls)
    if args.action == "count":
        if args.pretty:
            _pretty([("signature", f"({args.k},{args.l})"), ("class", args.cls), ("count", len(found))])
        else:
            _emit({"count": len(found)}, config)
        return 0
    items = [p.to_json() | {"class": diagrams.classify(p).value} for p in found]
    if args.json or not args.pretty:
        _emit({"count": len(found), "pairings": items}, config)
    else:
        for p in found:
            print(f"{p}  {diagrams.classify(p).value}")
    return 0


def cmd_hom_dim(args: argparse.Namespace) -> int:
    config = _config(args)
    space = tensor_maps.hom_dim(args.n, args.k, args.l, args.cls, cap=config.max_cells)
    if args.dump_matrices:
        mats = [
            {"pairing": p.to_json(), "matrix": tensor_maps.build_Tp(p, args.n).to_triplets()}
            for p in diagrams.enumerate_pairings(args.k, args.l, args.cls)
        ]
        Path(args.dump_matrices).write_text(json.dumps(mats, sort_keys=True) + "\n")
    if args.pretty:
        _pretty([("rank", space.rank), ("set_size", space.set_size), ("basis", list(space.basis_indices))])
    else:
        _emit({"rank": space.rank, "set_size": space.set_size, "basis_indices": list(space.basis_indices)}, config)
    return 0


def _summand(key, mult: int) -> dict:
    if isinstance(key, GroupElement):
        return {"weight": list(key.lam), "sector": key.sector.value, "mult": mult, "dim": fusion.weyl_dim(key.lam)}
    return {"weight": list(key), "mult": mult, "dim": fusion.weyl_dim(key)}


def cmd_fuse(args: argparse.Namespace) -> int:
    config = _config(args)
    for w in (args.lhs, args.rhs):
        if len(w) != args.n:
            raise ValueError(f"weight {w} does not have {args.n} entries")
    if args.side == "ostar":
        lhs = GroupElement(args.lhs, weights.sector_of(args.lhs))
        rhs = GroupElement(args.rhs, weights.sector_of(args.rhs))
        dec = fusion.tensor_Ostar(lhs, rhs)
    else:
        dec = fusion.tensor_Un(args.lhs, args.rhs)
    summands = [_summand(key, m) for key, m in dec.items()]
    total = sum(s["mult"] * s["dim"] for s in summands)
    if args.pretty:
        for s in summands:
            print(f"{tuple(s['weight'])} {s.get('sector', '')} x{s['mult']} dim {s['dim']}")
        print(f"total_dim {total}")
    else:
        _emit({"summands": summands, "total_dim": total}, config)
    return 0


def cmd_weights(args: argparse.Namespace) -> int:
    config = _config(args)
    lam = args.of
    if len(lam) != args.n:
        raise ValueError(f"weight {lam} does not have {args.n} entries")
    sector = weights.sector_of(lam)
    element = GroupElement(lam, sector)
    payload = {
        "element": element.to_json(),
        "dominant": weights.is_dominant(lam),
    }
    if weights.is_dominant(lam):
        payload["dimension"] = fusion.weyl_dim(lam)
        payload["conjugate"] = fusion.conjugate_Ostar(element).to_json()
        if args.multiset:
            ms = weights.weight_multiset_Ostar(element, cap=config.max_summands)
            payload["multiset"] = [{"lambda": list(g.lam), "mult": m} for g, m in ms.items()]
    if args.pretty:
        _pretty([(k, v) for k, v in payload.items()])
    else:
        _emit(payload, config)
    return 0


def cmd_cayley(args: argparse.Namespace) -> int:
    config = _config(args)
    g = cayley.build_graph(args.group, args.n, args.radius, cap=config.max_vertices)
    if args.format == "dot":
        text = g.to_dot()
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    else:
        _emit({"graph": g.to_json()}, config, args.out)
    return 0


def cmd_growth(args: argparse.Namespace) -> int:
    config = _config(args)
    g = cayley.build_graph(args.group, args.n, args.kmax, cap=config.max_vertices)
    series = cayley.ball_volumes(g, args.kmax)
    if args.csv:
        Path(args.csv).write_text(series.to_csv())
    payload: dict = {"b": list(series.values)}
    if args.fit:
        payload["fit"] = cayley.fit_exponent(series, *args.fit).to_json()
    _emit(payload, config)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    tier = "full" if args.full else "quick"
    results = verify.run_checks(tier, args.seed)
    sys.stdout.write(f"ostar {__version__} verify --{tier} seed={args.seed}\n")
    sys.stdout.write(verify.render(results, timings=args.timings))
    return 0 if all(r.passed for r in results) else 1


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ostar", description="Invariants of the half-liberated orthogonal group.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        return p

    p = add("diagrams", cmd_diagrams, "count or list Brauer pairings")
    p.add_argument("action", choices=("count", "list"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=("P", "E", "N"), default="P")
    p.add_argument("--json", action="store_true")

    p = add("hom-dim", cmd_hom_dim, "rank of a span of diagram maps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=("P", "E", "N"), default="E")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dump-matrices", metavar="FILE", help="write every T_p as sparse triplets")

    p = add("fuse", cmd_fuse, "decompose a tensor product of two irreducibles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lhs", type=_weight, required=True)
    p.add_argument("--rhs", type=_weight, required=True)
    p.add_argument("--side", choices=("ostar", "un"), default="ostar")

    p = add("weights", cmd_weights, "sector, dimension and weights of an O_n* irreducible")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--of", type=_weight, required=True)
    p.add_argument("--multiset", action="store_true")

    p = add("cayley", cmd_cayley, "build a Cayley graph")
    p.add_argument("--group", choices=cayley.GROUPS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("dot", "json"), default="json")

    p = add("growth", cmd_growth, "ball volumes b_k and growth exponent fits")
    p.add_argument("--group", choices=cayley.GROUPS, default="ostar")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--csv")
    p.add_argument("--fit", type=int, nargs=2, metavar=("KMIN", "KMAX"))

    p = add("verify", cmd_verify, "run the acceptance checks")
    tier = p.add_mutually_exclusive_group()
    tier.add_argument("--quick", action="store_true", help="criteria 1-8 (default)")
    tier.add_argument("--full", action="store_true", help="all criteria")
    p.add_argument("--timings", action="store_true", help="append run times (output no longer reproducible)")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, MembershipError, ResourceLimitError) as exc:
        print(f"ostar {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
