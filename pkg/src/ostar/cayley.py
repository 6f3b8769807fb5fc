"""Cayley graphs of fusion rings and ball volumes.

Vertices are irreducibles labelled by highest weights in Z^n; a vertex w has
``dim Hom(x, w ⊗ u_1)`` edges to each x.  Generators u_1:

    ostar  the fundamental corepresentation u = ū of O_n*
    un     v ⊕ v̄ for U_n
    pun    the adjoint summand of v ⊗ v̄ for PU_n (weights with sum 0)
    sun    v ⊕ v̄ for SU_n; weights modulo (1, ..., 1), stored as the lift
           with coordinate sum in {0, ..., n-1}

O_n* vertices are stored by their ψ-image; the sector is read off the
coordinate sum.  A graph of radius R keeps the ball of radius R with all edges
inside it, plus the sphere of radius R+1 and its edges to the ball; the shell
is what makes length-2 path counts exact up to the boundary.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from .config import ResourceLimitError, max_vertices
from .fusion import conjugate_Un, fundamental, tensor_Ostar, tensor_Un, weyl_dim
from .weights import GroupElement, Weight, is_dominant, sector_of

GROUPS = ("ostar", "un", "pun", "sun")

__all__ = [
    "CayleyGraph",
    "ExponentFit",
    "GrowthSeries",
    "Vertex",
    "ball_volumes",
    "build_graph",
    "fit_exponent",
    "inclusion_chain",
    "projective_collapse",
    "restrict",
    "same_graph",
    "subgraph_check",
]


@dataclass(frozen=True)
class Vertex:
    weight: Weight
    dim: int
    length: int


@dataclass
class CayleyGraph:
    group: str
    n: int
    radius: int
    vertices: tuple[Vertex, ...]
    edges: dict[tuple[int, int], int]
    shell: tuple[Vertex, ...] = ()
    # edges with one end in the shell; shell vertex s has index len(vertices) + s
    shell_edges: dict[tuple[int, int], int] = field(default_factory=dict)

    def index(self) -> dict[Weight, int]:
        return {v.weight: i for i, v in enumerate(self.vertices)}

    def label(self, v: Vertex) -> str:
        w = ",".join(map(str, v.weight))
        if self.group == "ostar":
            return f"({w})·{sector_of(v.weight).value}"
        return f"({w})"

    def weighted_edges(self) -> dict[tuple[Weight, Weight], int]:
        return {(self.vertices[i].weight, self.vertices[j].weight): m for (i, j), m in self.edges.items()}

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            "radius": self.radius,
            "vertices": [
                {"weight": list(v.weight), "dim": v.dim, "length": v.length}
                | ({"sector": sector_of(v.weight).value} if self.group == "ostar" else {})
                for v in self.vertices
            ],
            "edges": [[i, j, m] for (i, j), m in sorted(self.edges.items())],
        }

    def to_dot(self) -> str:
        lines = [f'digraph "{self.group}_{self.n}" {{']
        for i, v in enumerate(self.vertices):
            lines.append(f'  v{i} [label="{self.label(v)} | {v.dim} | {v.length}"];')
        for (i, j), m in sorted(self.edges.items()):
            attr = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  v{i} -> v{j}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _canonical_su(w: Weight) -> Weight:
    n = len(w)
    shift = sum(w) // n
    return tuple(x - shift for x in w)


def origin(group: str, n: int) -> Weight:
    return (0,) * n


@lru_cache(maxsize=None)
def neighbours(group: str, w: Weight) -> tuple[tuple[Weight, int], ...]:
    """Summands of w ⊗ u_1 with multiplicities."""
    n = len(w)
    v = (1,) + (0,) * (n - 1)
    vbar = conjugate_Un(v)
    out: Counter = Counter()
    if group == "ostar":
        for x, m in tensor_Ostar(GroupElement(w, sector_of(w)), fundamental(n)).items():
            out[x.lam] += m
    elif group == "un":
        out.update(tensor_Un(w, v))
        out.update(tensor_Un(w, vbar))
    elif group == "pun":
        adjoint = tuple(a + b for a, b in zip(v, vbar))
        out.update(tensor_Un(w, adjoint))
    elif group == "sun":
        for part in (tensor_Un(w, v), tensor_Un(w, vbar)):
            for x, m in part.items():
                out[_canonical_su(x)] += m
    else:
        raise ValueError(f"unknown group {group!r}")
    return tuple(sorted(out.items()))


def build_graph(group: str, n: int, radius: int, cap: int | None = None) -> CayleyGraph:
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}; expected one of {GROUPS}")
    if n < 2:
        raise ValueError("n must be at least 2")
    if radius < 0:
        raise ValueError("radius must be non-negative")
    cap = max_vertices() if cap is None else cap
    length = {origin(group, n): 0}
    layer = [origin(group, n)]
    for depth in range(radius + 1):
        nxt = []
        for w in layer:
            for x, _ in neighbours(group, w):
                if x not in length:
                    length[x] = depth + 1
                    nxt.append(x)
        if len(length) > cap:
            raise ResourceLimitError(f"more than {cap} vertices within radius {depth + 1}")
        layer = nxt

    def vertex(w: Weight) -> Vertex:
        return Vertex(w, weyl_dim(w), length[w])

    ball = sorted((w for w, d in length.items() if d <= radius), key=lambda w: (length[w], w))
    shell = sorted((w for w, d in length.items() if d == radius + 1), key=lambda w: (length[w], w))
    index = {w: i for i, w in enumerate(ball + shell)}
    edges: dict[tuple[int, int], int] = {}
    shell_edges: dict[tuple[int, int], int] = {}
    for w in ball + shell:
        i = index[w]
        for x, m in neighbours(group, w):
            j = index.get(x)
            if j is None:
                continue
            if i < len(ball) and j < len(ball):
                edges[(i, j)] = m
            elif i < len(ball) or j < len(ball):
                shell_edges[(i, j)] = m
    return CayleyGraph(
        group, n, radius,
        tuple(vertex(w) for w in ball),
        dict(sorted(edges.items())),
        tuple(vertex(w) for w in shell),
        dict(sorted(shell_edges.items())),
    )


def restrict(g: CayleyGraph, radius: int) -> CayleyGraph:
    """The ball of a smaller radius inside an already built graph (without shell)."""
    if radius > g.radius:
        raise ValueError(f"graph only built to radius {g.radius}")
    keep = [i for i, v in enumerate(g.vertices) if v.length <= radius]
    new = {old: i for i, old in enumerate(keep)}
    edges = {(new[i], new[j]): m for (i, j), m in g.edges.items() if i in new and j in new}
    return CayleyGraph(g.group, g.n, radius, tuple(g.vertices[i] for i in keep), edges)


def subgraph_check(a: CayleyGraph, u: CayleyGraph) -> bool:
    """Is the O_n* graph the full subgraph of the U_n graph on weights with sum 0 or 1?

    Compares vertices (weight, dimension, length) and edge multiplicities within
    the radius of ``a``.
    """
    if a.group != "ostar" or u.group != "un":
        raise ValueError("expected an ostar graph and a un graph")
    if a.n != u.n:
        raise ValueError("graphs for different n")
    if a.radius > u.radius:
        raise ValueError(f"U_n graph radius {u.radius} is smaller than O_n* radius {a.radius}")
    sub = restrict(u, a.radius)
    keep = {i for i, v in enumerate(sub.vertices) if sum(v.weight) in (0, 1)}
    u_vertices = {sub.vertices[i] for i in keep}
    u_edges = {
        (sub.vertices[i].weight, sub.vertices[j].weight): m
        for (i, j), m in sub.edges.items()
        if i in keep and j in keep
    }
    return set(a.vertices) == u_vertices and a.weighted_edges() == u_edges


def projective_collapse(a: CayleyGraph) -> CayleyGraph:
    """PU_n graph of radius r from the O_n* graph of radius 2r.

    Keeps the circ vertices, joins them by the length-2 paths of ``a`` and
    removes one loop at each vertex.
    """
    if a.group != "ostar":
        raise ValueError("expected an ostar graph")
    if a.radius % 2:
        raise ValueError(f"radius must be even, got {a.radius}")
    adjacency: dict[int, list[tuple[int, int]]] = {}
    for (i, j), m in list(a.edges.items()) + list(a.shell_edges.items()):
        adjacency.setdefault(i, []).append((j, m))
    circ = [i for i, v in enumerate(a.vertices) if sum(v.weight) == 0]
    new = {old: i for i, old in enumerate(circ)}
    edges: Counter = Counter()
    for x in circ:
        for y, m1 in adjacency.get(x, ()):
            for z, m2 in adjacency.get(y, ()):
                if z in new:
                    edges[(new[x], new[z])] += m1 * m2
    for i in range(len(circ)):
        if edges[(i, i)] < 1:
            raise ArithmeticError(f"no loop to remove at {a.vertices[circ[i]].weight}")
        edges[(i, i)] -= 1
    vertices = tuple(Vertex(a.vertices[i].weight, a.vertices[i].dim, a.vertices[i].length // 2) for i in circ)
    return CayleyGraph("pun", a.n, a.radius // 2, vertices, {e: m for e, m in sorted(edges.items()) if m})


def same_graph(g: CayleyGraph, h: CayleyGraph) -> bool:
    """Equality of balls up to vertex ordering (shells ignored)."""
    return (
        g.group == h.group
        and g.n == h.n
        and set(g.vertices) == set(h.vertices)
        and g.weighted_edges() == h.weighted_edges()
    )


# --- growth ------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthSeries:
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("a growth series starts with b_0 = 1")
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("a growth series is nondecreasing")

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def to_csv(self) -> str:
        return "k,b_k\n" + "".join(f"{k},{b}\n" for k, b in enumerate(self.values))


def ball_volumes(g: CayleyGraph, kmax: int) -> GrowthSeries:
    """b_k = Σ_{length(w) ≤ k} dim(w)², for k = 0..kmax."""
    if kmax > g.radius:
        raise ValueError(f"graph radius {g.radius} is smaller than kmax={kmax}")
    per_length = [0] * (kmax + 1)
    for v in g.vertices:
        if v.length <= kmax:
            per_length[v.length] += v.dim**2
    out, total = [], 0
    for x in per_length:
        total += x
        out.append(total)
    return GrowthSeries(tuple(out))


@dataclass(frozen=True)
class ExponentFit:
    slope: float
    intercept: float
    kmin: int
    kmax: int
    dyadic: dict[int, float]

    def to_json(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "kmin": self.kmin,
            "kmax": self.kmax,
            "dyadic": {str(k): r for k, r in self.dyadic.items()},
        }


def fit_exponent(series: GrowthSeries | Sequence[int], kmin: int, kmax: int) -> ExponentFit:
    """Least-squares slope of log b_k against log k for k in [kmin, kmax].

    Also reports the dyadic ratios log2(b_{2k} / b_k) for kmin ≤ k ≤ kmax/2.
    """
    values = series.values if isinstance(series, GrowthSeries) else tuple(series)
    if kmin < 2 or kmax <= kmin or kmax >= len(values):
        raise ValueError(f"degenerate fit range [{kmin}, {kmax}] for {len(values)} terms")
    if any(values[k] <= 0 for k in range(kmin, kmax + 1)):
        raise ValueError("ball volumes must be positive on the fit range")
    xs = [math.log(k) for k in range(kmin, kmax + 1)]
    ys = [math.log(values[k]) for k in range(kmin, kmax + 1)]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sxx
    dyadic = {k: math.log2(values[2 * k] / values[k]) for k in range(kmin, kmax // 2 + 1)}
    return ExponentFit(slope, my - slope * mx, kmin, kmax, dyadic)


def inclusion_chain(n: int, k: int, graphs: dict[str, CayleyGraph] | None = None) -> bool:
    """B_k(PU_n) ⊂ B_2k(O_n*) ⊂ B_2k(SU_n) on weights, and the matching b_k inequalities.

    PU_n weights (coordinate sum 0) and O_n* weights (ψ-images, sum 0 or 1) are
    already the canonical SU_n lifts.  ``graphs`` may supply prebuilt graphs of
    sufficient radius keyed by group.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    graphs = dict(graphs or {})
    need = {"pun": k, "ostar": 2 * k, "sun": 2 * k}
    balls = {}
    for group, r in need.items():
        g = graphs.get(group)
        if g is None:
            g = build_graph(group, n, r)
        if g.radius < r:
            raise ValueError(f"{group} graph radius {g.radius} is smaller than {r}")
        balls[group] = restrict(g, r)
    pu = {v.weight for v in balls["pun"].vertices}
    a = {v.weight for v in balls["ostar"].vertices}
    su = {v.weight for v in balls["sun"].vertices}
    b_pu = ball_volumes(balls["pun"], k)[k]
    b_a = ball_volumes(balls["ostar"], 2 * k)[2 * k]
    b_su = ball_volumes(balls["sun"], 2 * k)[2 * k]
    return pu <= a <= su and b_pu <= b_a <= b_su


def dump_json(g: CayleyGraph) -> str:
    return json.dumps(g.to_json(), sort_keys=True)
