"""Tensor product decompositions for U_n and the twisted fusion rules of O_n*.

U_n irreducibles are labelled by dominant weights in Z^n (entries may be
negative).  Products are computed with the Littlewood-Richardson rule after
shifting both weights by a multiple of (1, ..., 1) to make them partitions;
twisting by a power of the determinant does not change LR coefficients.

For O_n*, with ψ forgetting the sector,

    ψ(a ⊗ b) = ψ(a) ⊗ ψ(b)'     where ψ(b)' is conjugated iff a is in the tau sector,

and every summand lies in the sector of a times the sector of b.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Mapping, Sequence
from functools import lru_cache
from math import prod

from .config import MembershipError, ResourceLimitError, max_summands
from .weights import GroupElement, Sector, Weight, is_dominant, weight_multiset_Un

__all__ = [
    "conjugate_Ostar",
    "conjugate_Un",
    "decompose_power",
    "fundamental",
    "hom_dimension",
    "lr_coefficients",
    "tensor_Ostar",
    "tensor_Ostar_sums",
    "tensor_Un",
    "tensor_Un_by_characters",
    "tensor_Un_sums",
    "total_dim",
    "weyl_dim",
]


def _check_dominant(lam: Sequence[int]) -> Weight:
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return lam


def weyl_dim(lam: Sequence[int]) -> int:
    lam = _check_dominant(lam)
    n = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def conjugate_Un(lam: Sequence[int]) -> Weight:
    lam = _check_dominant(lam)
    return tuple(-x for x in reversed(lam))


def _sorted(dec: Mapping) -> dict:
    return {key: dec[key] for key in sorted(dec, reverse=True)}


# --- Littlewood-Richardson ------------------------------------------------------


def _lr_fillings(lam: Weight, mu: Weight, n: int) -> Iterator[Weight]:
    """Yield the outer shape ν once per LR tableau of shape ν/λ and content μ.

    A tableau is encoded row by row as counts a[r][i] = number of entries i+1
    in row r.  Rows hold only letters ≤ r+1; columns must strictly increase and
    the reverse reading word must be a lattice word.
    """
    lam = lam + (0,) * (n - len(lam))
    letters = len(mu)
    used = [0] * letters  # entries of each letter placed in rows so far

    def row_choices(r: int, prev_ends: list[int]) -> Iterator[list[int]]:
        # prev_ends[i]: column where entries ≤ i+1 end in row r-1 (with λ_{r-1} for "≤ 0")
        top = min(r + 1, letters)
        counts = [0] * top

        def rec(i: int, end: int) -> Iterator[list[int]]:
            if i == top:
                yield list(counts)
                return
            limit = mu[i] - used[i]
            if i > 0:
                # lattice: letters i+1 so far ≤ letters i placed in earlier rows
                limit = min(limit, used[i - 1] - used[i])
            # column strictness: cells ≤ i+1 in row r lie under cells ≤ i in row r-1
            if r > 0:
                limit = min(limit, prev_ends[i] - end)
            for c in range(max(limit, 0) + 1):
                counts[i] = c
                yield from rec(i + 1, end + c)
            counts[i] = 0

        yield from rec(0, lam[r])

    def rows(r: int, prev_ends: list[int], shape: list[int]) -> Iterator[Weight]:
        if r == n:
            if used == list(mu):
                yield tuple(shape)
            return
        for counts in row_choices(r, prev_ends):
            for i, c in enumerate(counts):
                used[i] += c
            ends = [lam[r]]
            for c in counts:
                ends.append(ends[-1] + c)
            ends += [ends[-1]] * (letters + 1 - len(ends))
            # row r+1 compares against: prev_ends[i] = end of letters ≤ i in row r
            yield from rows(r + 1, ends, shape + [ends[-1]])
            for i, c in enumerate(counts):
                used[i] -= c

    yield from rows(0, [], [])


@lru_cache(maxsize=65536)
def lr_coefficients(lam: Weight, mu: Weight, n: int) -> tuple[tuple[Weight, int], ...]:
    """LR coefficients c^ν_{λμ} for partitions, keeping ν with at most n rows."""
    mu = tuple(x for x in mu if x)
    return tuple(sorted(Counter(_lr_fillings(tuple(lam), mu, n)).items(), reverse=True))


def tensor_Un(lam: Sequence[int], mu: Sequence[int]) -> dict[Weight, int]:
    lam, mu = _check_dominant(lam), _check_dominant(mu)
    if len(lam) != len(mu):
        raise ValueError("weights of different length")
    n = len(lam)
    if n == 0:
        return {(): 1}
    s, t = max(0, -lam[-1]), max(0, -mu[-1])
    out = {}
    for nu, c in lr_coefficients(tuple(x + s for x in lam), tuple(x + t for x in mu), n):
        out[tuple(x - s - t for x in nu)] = c
    return _sorted(out)


def tensor_Un_by_characters(lam: Sequence[int], mu: Sequence[int]) -> dict[Weight, int]:
    """Independent route: multiply weight multisets, then peel off highest weights."""
    lam, mu = _check_dominant(lam), _check_dominant(mu)
    chi: Counter = Counter()
    for w1, m1 in weight_multiset_Un(lam).items():
        for w2, m2 in weight_multiset_Un(mu).items():
            chi[tuple(a + b for a, b in zip(w1, w2))] += m1 * m2
    out = {}
    while chi:
        # the lexicographically largest weight is the highest weight of a summand
        top = max(chi)
        c = chi[top]
        out[top] = c
        for w, m in weight_multiset_Un(top).items():
            chi[w] -= c * m
            if chi[w] == 0:
                del chi[w]
            elif chi[w] < 0:
                raise ArithmeticError("character peeling went negative")
    return _sorted(out)


def tensor_Un_sums(left: Mapping[Weight, int], right: Mapping[Weight, int]) -> dict[Weight, int]:
    out: Counter = Counter()
    for a, ma in left.items():
        for b, mb in right.items():
            for nu, c in tensor_Un(a, b).items():
                out[nu] += ma * mb * c
    return _sorted(out)


def total_dim(dec: Mapping) -> int:
    return sum(m * weyl_dim(key.lam if isinstance(key, GroupElement) else key) for key, m in dec.items())


def hom_dimension(left: Mapping, right: Mapping) -> int:
    """dim Hom between two semisimple objects given as decompositions."""
    return sum(m * right.get(key, 0) for key, m in left.items())


# --- O_n* -----------------------------------------------------------------------


def _check_Lpp(a: GroupElement) -> GroupElement:
    a.check()
    if not is_dominant(a.lam):
        raise MembershipError(f"{a} is not dominant")
    return a


def fundamental(n: int) -> GroupElement:
    """Highest weight e_1·tau of the fundamental corepresentation u."""
    return GroupElement((1,) + (0,) * (n - 1), Sector.TAU)


def conjugate_Ostar(a: GroupElement) -> GroupElement:
    _check_Lpp(a)
    if a.sector is Sector.TAU:
        return a
    return GroupElement(conjugate_Un(a.lam), Sector.CIRC)


def tensor_Ostar(a: GroupElement, b: GroupElement) -> dict[GroupElement, int]:
    _check_Lpp(a)
    _check_Lpp(b)
    right = conjugate_Un(b.lam) if a.sector is Sector.TAU else b.lam
    sector = a.sector * b.sector
    out = {}
    for nu, c in tensor_Un(a.lam, right).items():
        out[GroupElement(nu, sector).check()] = c
    return out


def tensor_Ostar_sums(left: Mapping[GroupElement, int], right: Mapping[GroupElement, int]) -> dict[GroupElement, int]:
    out: Counter = Counter()
    for a, ma in left.items():
        for b, mb in right.items():
            for nu, c in tensor_Ostar(a, b).items():
                out[nu] += ma * mb * c
    return _sorted(out)


def decompose_power(n: int, k: int, side: str = "Ostar", cap: int | None = None) -> dict:
    """u^{⊗k} for O_n* (side="Ostar"), or v ⊗ v̄ ⊗ v ⊗ ... (k factors) for U_n
    (side="Un_alternating")."""
    cap = max_summands() if cap is None else cap
    if side == "Ostar":
        dec: dict = {GroupElement((0,) * n, Sector.CIRC): 1}
        factor = {fundamental(n): 1}
        step = tensor_Ostar_sums
    elif side == "Un_alternating":
        dec = {(0,) * n: 1}
        step = tensor_Un_sums
    else:
        raise ValueError(f"unknown side {side!r}")
    v = (1,) + (0,) * (n - 1)
    for i in range(k):
        if side == "Un_alternating":
            factor = {v if i % 2 == 0 else conjugate_Un(v): 1}
        dec = step(dec, factor)
        if len(dec) > cap:
            raise ResourceLimitError(f"{len(dec)} summands exceed the cap of {cap}")
    return dec
