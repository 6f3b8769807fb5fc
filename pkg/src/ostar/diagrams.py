"""Brauer pairings between k upper and l lower points.

The k + l points are numbered around the boundary circle: the bottom row gets
1..l from left to right, then the numbering continues counterclockwise so the
top row gets l+1..l+k from right to left.  ``Pairing.partner`` stores the
matching 0-based; every public function taking a point index uses the 1-based
numbering.

Crossings are chord interleavings on that circle, so every quantity here is
invariant under planar isotopy and under rotation of the circle.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

__all__ = [
    "DiagramClass",
    "DiagramSet",
    "Pairing",
    "cap",
    "cap_arc",
    "classify",
    "compose",
    "crossing",
    "crossing_count",
    "cup",
    "enumerate_pairings",
    "generate",
    "identity",
    "involute",
    "p3",
    "rotate",
    "tensor",
]

CLASSES = ("P", "E", "N")


class DiagramClass(enum.Enum):
    P_ONLY = "P_only"
    E_NOT_N = "E_not_N"
    N = "N"

    def belongs_to(self, cls: str) -> bool:
        """Membership in the (coarser) set ``cls`` in {"P", "E", "N"}."""
        if cls == "P":
            return True
        if cls == "E":
            return self is not DiagramClass.P_ONLY
        if cls == "N":
            return self is DiagramClass.N
        raise ValueError(f"unknown class {cls!r}")


@dataclass(frozen=True, order=True)
class Pairing:
    k: int
    l: int
    partner: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError("k and l must be non-negative")
        m = self.k + self.l
        if len(self.partner) != m:
            raise ValueError(f"partner has length {len(self.partner)}, expected {m}")
        for a, b in enumerate(self.partner):
            if not 0 <= b < m or b == a or self.partner[b] != a:
                raise ValueError(f"partner is not a fixed-point-free involution: {self.partner}")

    @classmethod
    def from_pairs(cls, k: int, l: int, pairs: Iterable[Sequence[int]]) -> Pairing:
        """Build from 1-based point pairs such as ``[[1, 4], [2, 3]]``."""
        m = k + l
        partner = [-1] * m
        for a, b in pairs:
            for x in (a, b):
                if not 1 <= x <= m or partner[x - 1] != -1:
                    raise ValueError(f"bad or repeated point {x} for {m} points")
            partner[a - 1] = b - 1
            partner[b - 1] = a - 1
        if -1 in partner:
            raise ValueError("pairs do not cover every point")
        return cls(k, l, tuple(partner))

    @property
    def size(self) -> int:
        return self.k + self.l

    @property
    def strings(self) -> int:
        return (self.k + self.l) // 2

    @property
    def signature(self) -> tuple[int, int]:
        return (self.k, self.l)

    def pairs(self) -> list[tuple[int, int]]:
        """1-based pairs ``(a, b)`` with ``a < b``, sorted."""
        return sorted((a + 1, b + 1) for a, b in enumerate(self.partner) if a < b)

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "pairs": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data: dict) -> Pairing:
        return cls.from_pairs(data["k"], data["l"], data["pairs"])

    # Circle index (0-based) <-> (row, position counted from the left, 0-based).
    def position(self, c: int) -> tuple[str, int]:
        if c < self.l:
            return ("bottom", c)
        return ("top", self.k - 1 - (c - self.l))

    def point(self, row: str, pos: int) -> int:
        if row == "bottom":
            return pos
        return self.l + (self.k - 1 - pos)

    def __str__(self) -> str:
        inner = ",".join(f"{{{a},{b}}}" for a, b in self.pairs())
        return f"({self.k},{self.l}):{{{inner}}}"


def _from_rows(k: int, l: int, links: Iterable[tuple[tuple[str, int], tuple[str, int]]]) -> Pairing:
    def point(row: str, pos: int) -> int:
        return pos if row == "bottom" else l + (k - 1 - pos)

    partner = [-1] * (k + l)
    for x, y in links:
        a, b = point(*x), point(*y)
        partner[a], partner[b] = b, a
    return Pairing(k, l, tuple(partner))


def identity(m: int) -> Pairing:
    return _from_rows(m, m, ((("bottom", j), ("top", j)) for j in range(m)))


def cup() -> Pairing:
    """The pairing on (2, 0): both upper points joined."""
    return Pairing(2, 0, (1, 0))


def cap_arc() -> Pairing:
    """The pairing on (0, 2): both lower points joined."""
    return Pairing(0, 2, (1, 0))


def crossing() -> Pairing:
    return Pairing.from_pairs(2, 2, [(1, 3), (2, 4)])


def p3() -> Pairing:
    """The half-liberation generator on (3, 3), inducing e_i⊗e_j⊗e_k ↦ e_k⊗e_j⊗e_i."""
    return Pairing.from_pairs(3, 3, [(1, 4), (2, 5), (3, 6)])


# --- crossings and classification -------------------------------------------


def _interleaves(a: int, b: int, c: int, d: int) -> bool:
    lo, hi = (a, b) if a < b else (b, a)
    return (lo < c < hi) != (lo < d < hi)


def crossing_count(p: Pairing, point: int) -> int:
    """Number of strings interleaving with the string through ``point`` (1-based)."""
    if not 1 <= point <= p.size:
        raise ValueError(f"point {point} out of range 1..{p.size}")
    a = point - 1
    b = p.partner[a]
    lo, hi = min(a, b), max(a, b)
    # A string crosses {a,b} iff exactly one of its ends lies strictly between.
    return sum(1 for c in range(lo + 1, hi) if not lo < p.partner[c] < hi)


def crossing_counts(p: Pairing) -> list[int]:
    """Crossing count of each string, strings ordered by their smaller point."""
    return [crossing_count(p, a + 1) for a in range(p.size) if a < p.partner[a]]


def total_crossings(p: Pairing) -> int:
    return sum(crossing_counts(p)) // 2


def has_even_crossings(p: Pairing) -> bool:
    return all(c % 2 == 0 for c in crossing_counts(p))


def has_even_gaps(p: Pairing) -> bool:
    """Every string has an even number of points strictly between its legs."""
    return all((abs(b - a) - 1) % 2 == 0 for a, b in enumerate(p.partner))


def is_alternating(p: Pairing) -> bool:
    """With points labelled a, b, a, b, ... every string joins an a to a b."""
    return all((a + b) % 2 == 1 for a, b in enumerate(p.partner))


def is_noncrossing(p: Pairing) -> bool:
    stack: list[int] = []
    for a, b in enumerate(p.partner):
        if a < b:
            stack.append(b)
        elif not stack or stack.pop() != a:
            return False
    return True


def classify(p: Pairing) -> DiagramClass:
    if not is_alternating(p):
        return DiagramClass.P_ONLY
    if is_noncrossing(p):
        return DiagramClass.N
    return DiagramClass.E_NOT_N


# --- enumeration ----------------------------------------------------------------


@dataclass(frozen=True)
class DiagramSet:
    k: int
    l: int
    pairings: tuple[Pairing, ...]

    def __post_init__(self):
        if len(set(self.pairings)) != len(self.pairings):
            raise ValueError("duplicate pairings in DiagramSet")
        for p in self.pairings:
            if p.signature != (self.k, self.l):
                raise ValueError(f"{p} does not have signature {(self.k, self.l)}")

    @classmethod
    def of(cls, k: int, l: int, pairings: Iterable[Pairing]) -> DiagramSet:
        return cls(k, l, tuple(sorted(set(pairings))))

    @property
    def signature(self) -> tuple[int, int]:
        return (self.k, self.l)

    def __len__(self) -> int:
        return len(self.pairings)

    def __iter__(self) -> Iterator[Pairing]:
        return iter(self.pairings)

    def __contains__(self, p: object) -> bool:
        return p in set(self.pairings)

    def as_set(self) -> frozenset[Pairing]:
        return frozenset(self.pairings)


def _all_matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for idx, other in enumerate(rest):
        for tail in _all_matchings(rest[:idx] + rest[idx + 1:]):
            yield [(first, other), *tail]


def _noncrossing_matchings(lo: int, hi: int) -> Iterator[list[tuple[int, int]]]:
    # Matchings of the interval [lo, hi) with no interleaving chords.
    if lo >= hi:
        yield []
        return
    for mid in range(lo + 1, hi, 2):
        for inner in _noncrossing_matchings(lo + 1, mid):
            for outer in _noncrossing_matchings(mid + 1, hi):
                yield [(lo, mid), *inner, *outer]


def _alternating_matchings(m: int) -> Iterator[list[tuple[int, int]]]:
    evens = list(range(0, m, 2))
    odds = list(range(1, m, 2))
    for perm in itertools.permutations(odds):
        yield list(zip(evens, perm))


def enumerate_pairings(k: int, l: int, cls: str = "P") -> DiagramSet:
    """All pairings on (k, l) in the set ``cls`` in {"P", "E", "N"}.

    Odd totals give the empty set.
    """
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    m = k + l
    if m % 2:
        return DiagramSet(k, l, ())
    if cls == "P":
        source = _all_matchings(list(range(m)))
    elif cls == "E":
        source = _alternating_matchings(m)
    else:
        source = _noncrossing_matchings(0, m)
    out = []
    for pairs in source:
        partner = [0] * m
        for a, b in pairs:
            partner[a], partner[b] = b, a
        out.append(Pairing(k, l, tuple(partner)))
    return DiagramSet.of(k, l, out)


# --- category operations --------------------------------------------------------


def cap(p: Pairing, i: int) -> Pairing:
    """Join points i and i+1 (1-based, modulo k+l) by a semicircle.

    The two points disappear; their former partners become joined, or the
    string is deleted when they were partners of each other.
    """
    m = p.size
    if m < 2:
        raise ValueError("capping needs at least two points")
    i0 = (i - 1) % m
    i1 = i % m
    a, b = p.partner[i0], p.partner[i1]
    removed = {i0, i1}
    keep = [c for c in range(m) if c not in removed]
    new_index = {c: idx for idx, c in enumerate(keep)}
    partner = []
    for c in keep:
        t = p.partner[c]
        if t == i0:
            t = b
        elif t == i1:
            t = a
        partner.append(new_index[t])
    lower_removed = sum(1 for c in removed if c < p.l)
    return Pairing(p.k - (2 - lower_removed), p.l - lower_removed, tuple(partner))


def cappings(p: Pairing) -> list[Pairing]:
    return [cap(p, i) for i in range(1, p.size + 1)]


def rotate(p: Pairing) -> Pairing:
    """Shift every label by one around the circle.

    With upper points present the top-left point becomes the new bottom-left
    point, so (k, l) -> (k-1, l+1).  On (0, l) the bottom row is cycled.
    """
    m = p.size
    if m == 0:
        return p
    partner = [0] * m
    for a, b in enumerate(p.partner):
        partner[(a + 1) % m] = (b + 1) % m
    if p.k > 0:
        return Pairing(p.k - 1, p.l + 1, tuple(partner))
    return Pairing(0, p.l, tuple(partner))


def involute(p: Pairing) -> Pairing:
    """Turn the diagram upside down: (k, l) -> (l, k)."""
    flip = {"top": "bottom", "bottom": "top"}
    links = []
    for a, b in enumerate(p.partner):
        if a < b:
            ra, pa = p.position(a)
            rb, pb = p.position(b)
            links.append(((flip[ra], pa), (flip[rb], pb)))
    return _from_rows(p.l, p.k, links)


def tensor(p: Pairing, q: Pairing) -> Pairing:
    """Place q to the right of p."""
    shift = {"p": {"top": 0, "bottom": 0}, "q": {"top": p.k, "bottom": p.l}}
    links = []
    for tag, d in (("p", p), ("q", q)):
        for a, b in enumerate(d.partner):
            if a < b:
                ra, pa = d.position(a)
                rb, pb = d.position(b)
                links.append(((ra, pa + shift[tag][ra]), (rb, pb + shift[tag][rb])))
    return _from_rows(p.k + q.k, p.l + q.l, links)


def compose(q: Pairing, p: Pairing) -> tuple[Pairing, int]:
    """Stack p (on (k, m)) below q (on (m, l)); return the glued pairing on (k, l)
    together with the number of closed loops removed.

    The lower points of p are glued to the upper points of q by position from
    the left, matching ``T_q ∘ T_p``.
    """
    if q.k != p.l:
        raise ValueError(f"cannot compose: q has {q.k} upper points, p has {p.l} lower points")
    m, l, k = p.l, q.l, p.k
    seen = [False] * m

    def q_top(j: int) -> int:
        return l + (q.k - 1 - j)

    def walk(side: str, c: int) -> int:
        # Traverse strings starting at point c of the given diagram until an
        # outer point is reached; return its index in the result.
        while True:
            if side == "q":
                d = q.partner[c]
                if d < l:
                    return d
                j = q.k - 1 - (d - l)
                seen[j] = True
                side, c = "p", j
            else:
                d = p.partner[c]
                if d >= m:
                    return l + (d - m)
                seen[d] = True
                side, c = "q", q_top(d)

    partner = [-1] * (k + l)
    for r in range(k + l):
        if partner[r] != -1:
            continue
        end = walk("q", r) if r < l else walk("p", m + (r - l))
        partner[r], partner[end] = end, r

    loops = 0
    for j in range(m):
        if seen[j]:
            continue
        loops += 1
        c = j
        while not seen[c]:
            seen[c] = True
            d = p.partner[c]
            seen[d] = True
            e = q.partner[q_top(d)]
            c = q.k - 1 - (e - l)
    return Pairing(k, l, tuple(partner)), loops


# --- bounded generation -----------------------------------------------------------


def generate(seed: Pairing | Iterable[Pairing], max_points: int) -> dict[tuple[int, int], DiagramSet]:
    """Closure of the seed(s) together with all noncrossing pairings.

    Closed under compose, tensor, involute, rotate and capping, keeping only
    diagrams with at most ``max_points`` points.  Rotation is included because
    in the unbounded category it is a composite with cups and caps whose
    intermediate diagrams would exceed the bound.
    """
    seeds = [seed] if isinstance(seed, Pairing) else list(seed)
    known: set[Pairing] = set()
    pending: list[Pairing] = []

    def add(x: Pairing):
        if x.size <= max_points and x not in known:
            known.add(x)
            pending.append(x)

    for total in range(0, max_points + 1, 2):
        for k in range(total + 1):
            for x in enumerate_pairings(k, total - k, "N"):
                add(x)
    for s in seeds:
        add(s)

    by_upper: dict[int, list[Pairing]] = {}
    by_lower: dict[int, list[Pairing]] = {}
    done: list[Pairing] = []
    while pending:
        x = pending.pop(0)
        add(involute(x))
        add(rotate(x))
        if x.size >= 2:
            for y in cappings(x):
                add(y)
        for y in done + [x]:
            if x.size + y.size <= max_points:
                add(tensor(x, y))
                add(tensor(y, x))
        # compose(q, p) needs q.k == p.l
        for p in by_lower.get(x.k, []) + ([x] if x.l == x.k else []):
            if p.k + x.l <= max_points:
                add(compose(x, p)[0])
        for q in by_upper.get(x.l, []):
            if x.k + q.l <= max_points:
                add(compose(q, x)[0])
        done.append(x)
        by_upper.setdefault(x.k, []).append(x)
        by_lower.setdefault(x.l, []).append(x)

    grouped: dict[tuple[int, int], list[Pairing]] = {}
    for x in known:
        grouped.setdefault(x.signature, []).append(x)
    return {sig: DiagramSet.of(*sig, grouped[sig]) for sig in sorted(grouped)}
