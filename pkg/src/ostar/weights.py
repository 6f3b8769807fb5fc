"""The diagonal group L_n inside Z^n ⋊ Z_2, dominant weights and weight multisets.

An element is written λ·x with λ ∈ Z^n and x ∈ {circ, tau}; tau acts on Z^n by
negation, so (λ·x)(μ·y) = (λ + x·μ)·(xy).  The generators are g_i = e_i·tau and
L_n is the union of

    L° = {λ·circ : Σλ_i = 0}     and     L^τ = {λ·tau : Σλ_i = 1}.

Comparing a, b ∈ L_n: a·b⁻¹ equals (ψ(a) − ψ(b))·circ when the sectors agree
and lands in L^τ otherwise, so a ≥ b iff the sectors agree and ψ(a) − ψ(b) has
non-negative partial sums and zero total.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .config import MembershipError, ResourceLimitError, max_summands

Weight = tuple[int, ...]

__all__ = [
    "GroupElement",
    "Sector",
    "eval_word",
    "eval_word_closed",
    "generator",
    "greatest_elements",
    "identity",
    "inverse",
    "is_dominant",
    "is_positive_diff",
    "multiply",
    "order_L",
    "psi",
    "sector_of",
    "weight_multiset_Ostar",
    "weight_multiset_Un",
]


class Sector(enum.Enum):
    CIRC = "circ"
    TAU = "tau"

    def __mul__(self, other: Sector) -> Sector:
        return Sector.CIRC if self is other else Sector.TAU

    def __lt__(self, other: Sector) -> bool:
        return self.value < other.value

    @property
    def coordinate_sum(self) -> int:
        return 0 if self is Sector.CIRC else 1


@dataclass(frozen=True, order=True)
class GroupElement:
    lam: Weight
    sector: Sector

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))

    @property
    def n(self) -> int:
        return len(self.lam)

    def in_L(self) -> bool:
        return sum(self.lam) == self.sector.coordinate_sum

    def check(self) -> GroupElement:
        if not self.in_L():
            raise MembershipError(
                f"{self} is not in L_n: a {self.sector.value} element needs coordinate sum "
                f"{self.sector.coordinate_sum}, got {sum(self.lam)}"
            )
        return self

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "sector": self.sector.value}

    @classmethod
    def from_json(cls, data: dict) -> GroupElement:
        return cls(tuple(data["lambda"]), Sector(data["sector"]))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.lam))})·{self.sector.value}"


def sector_of(lam: Sequence[int]) -> Sector:
    """Infer the sector of an element of L_n from its coordinate sum."""
    s = sum(lam)
    if s == 0:
        return Sector.CIRC
    if s == 1:
        return Sector.TAU
    raise MembershipError(f"coordinate sum {s} is neither 0 (circ) nor 1 (tau)")


def identity(n: int) -> GroupElement:
    return GroupElement((0,) * n, Sector.CIRC)


def generator(i: int, n: int) -> GroupElement:
    """g_i = e_i·tau, with 1-based i."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    return GroupElement(tuple(int(j == i - 1) for j in range(n)), Sector.TAU)


def multiply(a: GroupElement, b: GroupElement, strict: bool = True) -> GroupElement:
    if a.n != b.n:
        raise ValueError("elements of different rank")
    if strict:
        a.check()
        b.check()
    sign = 1 if a.sector is Sector.CIRC else -1
    return GroupElement(tuple(x + sign * y for x, y in zip(a.lam, b.lam)), a.sector * b.sector)


def inverse(a: GroupElement, strict: bool = True) -> GroupElement:
    if strict:
        a.check()
    if a.sector is Sector.CIRC:
        return GroupElement(tuple(-x for x in a.lam), Sector.CIRC)
    return a


def eval_word(word: Iterable[int], n: int) -> GroupElement:
    """Product g_{w_1} g_{w_2} ... in the Z^n ⋊ Z_2 model."""
    out = identity(n)
    for i in word:
        out = multiply(out, generator(i, n))
    return out


def eval_word_closed(word: Sequence[int], n: int) -> GroupElement:
    """Odd-position minus even-position occurrence counts, sector = length mod 2."""
    lam = [0] * n
    for pos, i in enumerate(word):
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        lam[i - 1] += 1 if pos % 2 == 0 else -1
    return GroupElement(tuple(lam), Sector.TAU if len(word) % 2 else Sector.CIRC)


def psi(a: GroupElement) -> Weight:
    return a.lam


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def is_positive_diff(a: Sequence[int], b: Sequence[int]) -> bool:
    """a ≥ b in the dominance order: a − b has partial sums ≥ 0 and total 0."""
    if len(a) != len(b):
        raise ValueError("weights of different length")
    total = 0
    for x, y in zip(a, b):
        total += x - y
        if total < 0:
            return False
    return total == 0


def in_L_plus(a: GroupElement) -> bool:
    return a.sector is Sector.CIRC and is_positive_diff(a.lam, (0,) * a.n)


def order_L(a: GroupElement, b: GroupElement) -> bool:
    """a ≥ b iff a·b⁻¹ ∈ L_+."""
    return in_L_plus(multiply(a, inverse(b)))


# --- weight multisets -----------------------------------------------------------


def _interlacing(top: Weight) -> Iterator[Weight]:
    # rows μ of length len(top) - 1 with top[i] >= μ[i] >= top[i+1]
    ranges = [range(top[i + 1], top[i] + 1) for i in range(len(top) - 1)]

    def rec(i: int, acc: list[int]) -> Iterator[Weight]:
        if i == len(ranges):
            yield tuple(acc)
            return
        for v in ranges[i]:
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    return rec(0, [])


@lru_cache(maxsize=4096)
def _gt_weights(top: Weight) -> tuple[tuple[Weight, int], ...]:
    if not top:
        return (((), 1),)
    counts: Counter = Counter()
    s = sum(top)
    for below in _interlacing(top):
        last = s - sum(below)
        for w, mult in _gt_weights(below):
            counts[w + (last,)] += mult
    return tuple(sorted(counts.items()))


def weight_multiset_Un(lam: Sequence[int], cap: int | None = None) -> dict[Weight, int]:
    """Weights of the U_n irreducible with highest weight ``lam``.

    Counted over Gelfand-Tsetlin patterns with top row ``lam``: the i-th weight
    coordinate is the difference of the sums of rows i and i−1.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    cap = max_summands() if cap is None else cap
    items = _gt_weights(lam)
    if sum(m for _, m in items) > cap:
        raise ResourceLimitError(f"weight multiset of {lam} exceeds {cap} patterns")
    return dict(sorted(items, reverse=True))


def weight_multiset_Ostar(lw: GroupElement, cap: int | None = None) -> dict[GroupElement, int]:
    """Weights of the O_n* irreducible with highest weight ``lw``, all in lw's sector."""
    lw.check()
    return {GroupElement(w, lw.sector): m for w, m in weight_multiset_Un(lw.lam, cap).items()}


def greatest_elements(elements: Iterable[GroupElement]) -> list[GroupElement]:
    """Elements that are ≥ every element of the collection."""
    pool = sorted(set(elements))
    return [a for a in pool if all(order_L(a, b) for b in pool)]
