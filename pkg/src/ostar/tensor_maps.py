"""Exact integer matrices T_p and ranks of spans of them.

A pairing p on (k, l) induces T_p : (C^n)^{⊗k} -> (C^n)^{⊗l}.  Rows are indexed
by the lower multi-index (j_1, ..., j_l) and columns by the upper multi-index
(i_1, ..., i_k), both read as base-n numbers with the first index most
significant.  Lower circle point c (0-based, c < l) carries j_{c+1}; upper
circle point l + t carries i_{k-t}, i.e. the top row is read right to left.

Ranks are computed by fraction-free elimination on Python integers.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .config import ResourceLimitError, max_cells
from .diagrams import Pairing, compose, enumerate_pairings, involute, tensor

__all__ = ["HomSpace", "IntMatrix", "bareiss_rank", "build_Tp", "functor_check", "hom_dim"]


@dataclass(frozen=True)
class IntMatrix:
    """Sparse matrix with exact integer entries; zero entries are not stored."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry {(r, c)} outside {self.rows}x{self.cols}")
            if v == 0:
                raise ValueError("zero entries must not be stored")

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]]) -> IntMatrix:
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {(r, c): v for r, row in enumerate(data) for c, v in enumerate(row) if v}
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls(size, size, {(i, i): 1 for i in range(size)})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], int] = {}
        for (r, m), v in self.entries.items():
            for c, w in by_row.get(m, ()):
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return IntMatrix(self.rows, other.cols, {key: v for key, v in acc.items() if v})

    def scale(self, factor: int) -> IntMatrix:
        if factor == 0:
            return IntMatrix(self.rows, self.cols)
        return IntMatrix(self.rows, self.cols, {key: v * factor for key, v in self.entries.items()})

    def kron(self, other: IntMatrix) -> IntMatrix:
        entries = {
            (r1 * other.rows + r2, c1 * other.cols + c2): v1 * v2
            for (r1, c1), v1 in self.entries.items()
            for (r2, c2), v2 in other.entries.items()
        }
        return IntMatrix(self.rows * other.rows, self.cols * other.cols, entries)

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def vectorize(self) -> dict[int, int]:
        """Row-major flattening (lower multi-index, then upper), as a sparse vector."""
        return {r * self.cols + c: v for (r, c), v in self.entries.items()}

    def to_triplets(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "triplets": [[r, c, v] for (r, c), v in sorted(self.entries.items())],
        }


def build_Tp(p: Pairing, n: int) -> IntMatrix:
    if n < 1:
        raise ValueError("n must be at least 1")
    k, l = p.k, p.l
    strings = [(a, b) for a, b in enumerate(p.partner) if a < b]
    # digit weight of each circle point in the row / column index
    row_weight = [n ** (l - 1 - c) for c in range(l)]
    col_weight = [n ** (c - l) for c in range(l, l + k)]
    entries = {}
    for values in itertools.product(range(n), repeat=len(strings)):
        r = c = 0
        for (a, b), v in zip(strings, values):
            for x in (a, b):
                if x < l:
                    r += v * row_weight[x]
                else:
                    c += v * col_weight[x - l]
        entries[(r, c)] = 1
    return IntMatrix(n**l, n**k, entries)


def bareiss_rank(rows: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Rows are processed in order, so the returned pivot rows are the
    lexicographically first maximal independent subset of the input rows.
    """
    work = [list(r) for r in rows]
    if not work:
        return 0, []
    prev = 1
    basis: list[int] = []
    active = list(range(len(work)))
    while active:
        i = active.pop(0)
        row = work[i]
        col = next((c for c, v in enumerate(row) if v), None)
        if col is None:
            continue
        basis.append(i)
        pivot = row[col]
        for j in active:
            other = work[j]
            f = other[col]
            # exact division: every entry is a minor of the original matrix
            work[j] = [(pivot * y - f * x) // prev for x, y in zip(row, other)]
        prev = pivot
    return len(basis), basis


@dataclass(frozen=True)
class HomSpace:
    n: int
    k: int
    l: int
    cls: str
    rank: int
    set_size: int
    basis_indices: tuple[int, ...]

    def __post_init__(self):
        assert self.rank <= self.set_size
        assert self.rank <= self.n ** (self.k + self.l)


def span_rank(pairings: Iterable[Pairing], n: int) -> tuple[int, list[int]]:
    vectors = [build_Tp(p, n).vectorize() for p in pairings]
    support = sorted(set().union(*vectors)) if vectors else []
    dense = [[v.get(c, 0) for c in support] for v in vectors]
    return bareiss_rank(dense)


def hom_dim(n: int, k: int, l: int, cls: str = "E", cap: int | None = None) -> HomSpace:
    """Rank of span{T_p : p in cls(k, l)} over the rationals."""
    if n < 1 or k < 0 or l < 0:
        raise ValueError("need n >= 1 and k, l >= 0")
    cap = max_cells() if cap is None else cap
    if n ** (k + l) > cap:
        raise ResourceLimitError(f"n^(k+l) = {n ** (k + l)} exceeds the cap of {cap} cells")
    diagrams = enumerate_pairings(k, l, cls)
    if (k + l) % 2:
        return HomSpace(n, k, l, cls, 0, 0, ())
    rank, basis = span_rank(diagrams, n)
    return HomSpace(n, k, l, cls, rank, len(diagrams), tuple(basis))


def functor_check(p: Pairing, q: Pairing, n: int) -> bool:
    """Check T_q T_p = n^loops T_{q∘p}, T_{p⊗q} = T_p ⊗ T_q and T_{p*} = T_p^t."""
    composite, loops = compose(q, p)
    Tp, Tq = build_Tp(p, n), build_Tp(q, n)
    return (
        Tq @ Tp == build_Tp(composite, n).scale(n**loops)
        and build_Tp(tensor(p, q), n) == Tp.kron(Tq)
        and build_Tp(involute(p), n) == Tp.transpose()
    )
