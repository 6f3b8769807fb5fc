"""Acceptance checks, shared by ``ostar verify`` and the test suite.

Each check is self-contained and returns a CheckResult; the report text is a
pure function of the results, so identical runs render identical bytes.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from collections.abc import Callable
from dataclasses import dataclass

from . import cayley, diagrams, fusion, tensor_maps, weights
from .weights import GroupElement, Sector

__all__ = ["CHECKS", "CheckResult", "brute_force_matchings", "render", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


# --- independent oracles ------------------------------------------------------------


def brute_force_matchings(m: int) -> list[tuple[tuple[int, int], ...]]:
    """Every choice of m/2 chords on m points that covers each point once."""
    if m % 2:
        return []
    chords = list(itertools.combinations(range(m), 2))
    masks = [(1 << a) | (1 << b) for a, b in chords]
    full = (1 << m) - 1
    out = []
    for combo in itertools.combinations(range(len(chords)), m // 2):
        acc = 0
        for i in combo:
            acc |= masks[i]
        if acc == full:
            out.append(tuple(chords[i] for i in combo))
    return out


def _chord_crossings(chords: tuple[tuple[int, int], ...]) -> list[int]:
    out = []
    for a, b in chords:
        out.append(sum(1 for c, d in chords if (a < c < b) != (a < d < b)))
    return out


def _double_factorial(x: int) -> int:
    return math.prod(range(x, 0, -2)) if x > 0 else 1


def _catalan(s: int) -> int:
    return math.comb(2 * s, s) // (s + 1)


def _partner(chords, m: int) -> tuple[int, ...]:
    partner = [0] * m
    for a, b in chords:
        partner[a], partner[b] = b, a
    return tuple(partner)


def _signatures(max_total: int, even_only: bool = True):
    for total in range(0, max_total + 1):
        if even_only and total % 2:
            continue
        for k in range(total + 1):
            yield k, total - k


# --- the criteria ------------------------------------------------------------------


def check_counts() -> tuple[bool, str]:
    ok = True
    sizes = []
    for m in range(0, 11, 2):
        s = m // 2
        oracle = brute_force_matchings(m)
        by_class = {"P": set(), "E": set(), "N": set()}
        for chords in oracle:
            crossings = _chord_crossings(chords)
            partner = _partner(chords, m)
            by_class["P"].add(partner)
            if all(c % 2 == 0 for c in crossings):
                by_class["E"].add(partner)
            if not any(crossings):
                by_class["N"].add(partner)
        expected = {"P": _double_factorial(2 * s - 1), "E": math.factorial(s), "N": _catalan(s)}
        for cls in "PEN":
            ok &= len(by_class[cls]) == expected[cls]
            for k in range(m + 1):
                found = {p.partner for p in diagrams.enumerate_pairings(k, m - k, cls)}
                ok &= found == by_class[cls]
        sizes.append(f"s={s}:{expected['P']}/{expected['E']}/{expected['N']}")
    return ok, "|P|/|E|/|N| " + " ".join(sizes)


def check_E_characterizations() -> tuple[bool, str]:
    total = disagree = 0
    for k, l in _signatures(10):
        for p in diagrams.enumerate_pairings(k, l, "P"):
            total += 1
            votes = {diagrams.has_even_crossings(p), diagrams.has_even_gaps(p), diagrams.is_alternating(p)}
            disagree += len(votes) > 1
    return disagree == 0, f"{total} pairings, {disagree} disagreements"


def check_capping_descent() -> tuple[bool, str]:
    ok = True
    notes = []
    for s in range(1, 6):
        odd_fail = odd_total = cross_fail = cross_total = 0
        for k in range(2 * s + 1):
            for p in diagrams.enumerate_pairings(k, 2 * s - k, "P"):
                c = diagrams.classify(p)
                caps = [diagrams.classify(q) for q in diagrams.cappings(p)]
                if c is diagrams.DiagramClass.P_ONLY:
                    odd_total += 1
                    odd_fail += not any(x is diagrams.DiagramClass.P_ONLY for x in caps)
                elif c is diagrams.DiagramClass.E_NOT_N:
                    cross_total += 1
                    cross_fail += not any(x is diagrams.DiagramClass.E_NOT_N for x in caps)
        if s >= 3:
            ok &= odd_fail == 0
        if s >= 4:
            ok &= cross_fail == 0
        notes.append(f"s={s}: P-E {odd_total - odd_fail}/{odd_total}, E-N {cross_total - cross_fail}/{cross_total}")
    return ok, "; ".join(notes)


def check_generation() -> tuple[bool, str]:
    ok = True
    seeds = {"crossing": (diagrams.crossing(), "P"), "p3": (diagrams.p3(), "E"), "identity": (diagrams.identity(1), "N")}
    sizes = []
    for name, (seed, cls) in seeds.items():
        closure = diagrams.generate(seed, 6)
        count = 0
        for k, l in _signatures(6):
            got = closure.get((k, l))
            got = got.as_set() if got is not None else frozenset()
            ok &= got == diagrams.enumerate_pairings(k, l, cls).as_set()
            count += len(got)
        sizes.append(f"<{name}>={cls} ({count} diagrams)")
    return ok, ", ".join(sizes)


def check_bridge() -> tuple[bool, str]:
    ok = True
    rows = []
    for n in (2, 3):
        powers = {k: fusion.decompose_power(n, k, "Un_alternating") for k in range(7)}
        ranks = []
        for k, l in _signatures(6):
            rank = tensor_maps.hom_dim(n, k, l, "E").rank
            expected = fusion.hom_dimension(powers[k], powers[l])
            ok &= rank == expected
            ranks.append(rank)
        rows.append(f"n={n} ranks {ranks}")
    return ok, "; ".join(rows)


def check_rank_separation() -> tuple[bool, str]:
    equal_n2 = all(
        tensor_maps.hom_dim(2, k, l, "E").rank == tensor_maps.hom_dim(2, k, l, "N").rank
        for k, l in _signatures(8)
    )
    strict = [
        (k, l)
        for k, l in _signatures(6)
        if tensor_maps.hom_dim(3, k, l, "E").rank > tensor_maps.hom_dim(3, k, l, "N").rank
    ]
    e33, n33 = tensor_maps.hom_dim(3, 3, 3, "E").rank, tensor_maps.hom_dim(3, 3, 3, "N").rank
    return equal_n2 and bool(strict), (
        f"n=2 E=N for all k+l<=8: {equal_n2}; n=3 strict at {len(strict)} signatures, (3,3): E={e33} N={n33}"
    )


def check_group_model() -> tuple[bool, str]:
    ok = True
    for n in (2, 3, 4):
        e = weights.identity(n)
        for i in range(1, n + 1):
            ok &= weights.eval_word([i, i], n) == e
        for a, b, c in itertools.product(range(1, n + 1), repeat=3):
            ok &= weights.eval_word([a, b, c], n) == weights.eval_word([c, b, a], n)
    n = 3
    words = 0
    for length in range(9):
        for word in itertools.product(range(1, n + 1), repeat=length):
            words += 1
            value = weights.eval_word(word, n)
            ok &= value == weights.eval_word_closed(word, n)
            if value == weights.identity(n):
                for i in range(1, n + 1):
                    ok &= word[0::2].count(i) == word[1::2].count(i)
    h = weights.multiply(weights.generator(1, 2), weights.generator(2, 2))
    powers = [weights.identity(2)]
    for _ in range(50):
        powers.append(weights.multiply(powers[-1], h))
    distinct = len(set(powers)) == len(powers)
    ok &= distinct
    return ok, f"{words} words at n=3; (g1g2)^j distinct for j<=50: {distinct}"


def _random_Lpp(rng: random.Random, n: int = 3, bound: int = 2) -> GroupElement:
    while True:
        lam = tuple(sorted((rng.randint(-bound, bound) for _ in range(n)), reverse=True))
        if sum(lam) in (0, 1):
            return GroupElement(lam, weights.sector_of(lam))


def check_fusion(seed: int = 0) -> tuple[bool, str]:
    u = fusion.fundamental(3)
    w = GroupElement((1, 1, -2), Sector.CIRC)
    uw = fusion.tensor_Ostar(u, w)
    wu = fusion.tensor_Ostar(w, u)
    tau = Sector.TAU
    ok = uw == {GroupElement((3, -1, -1), tau): 1, GroupElement((2, 0, -1), tau): 1}
    ok &= wu == {GroupElement((2, 1, -2), tau): 1, GroupElement((1, 1, -1), tau): 1}
    ok &= uw != wu
    rng = random.Random(seed)
    assoc = anti = 0
    for _ in range(100):
        a, b, c = (_random_Lpp(rng) for _ in range(3))
        left = fusion.tensor_Ostar_sums(fusion.tensor_Ostar(a, b), {c: 1})
        right = fusion.tensor_Ostar_sums({a: 1}, fusion.tensor_Ostar(b, c))
        assoc += left == right
        conj_ab = {}
        for x, m in fusion.tensor_Ostar(a, b).items():
            y = fusion.conjugate_Ostar(x)
            conj_ab[y] = conj_ab.get(y, 0) + m
        flipped = fusion.tensor_Ostar(fusion.conjugate_Ostar(b), fusion.conjugate_Ostar(a))
        anti += conj_ab == flipped
    ok &= assoc == 100 and anti == 100
    return ok, f"u⊗w != w⊗u: {uw != wu}; associativity {assoc}/100, anti-homomorphism {anti}/100 (seed {seed})"


def check_highest_weights() -> tuple[bool, str]:
    ok = True
    count = 0
    for lam in itertools.product(range(-4, 5), repeat=3):
        if sum(map(abs, lam)) > 4 or not weights.is_dominant(lam) or sum(lam) not in (0, 1):
            continue
        count += 1
        lw = GroupElement(lam, weights.sector_of(lam))
        ms = weights.weight_multiset_Ostar(lw)
        ok &= weights.greatest_elements(ms) == [lw]
        ok &= sum(ms.values()) == fusion.weyl_dim(lam)
    return ok, f"{count} dominant L-weights with sum|λ|<=4"


def check_cayley() -> tuple[bool, str]:
    sub = {n: cayley.subgraph_check(cayley.build_graph("ostar", n, 6), cayley.build_graph("un", n, 6)) for n in (2, 3)}
    collapse = cayley.projective_collapse(cayley.build_graph("ostar", 3, 12))
    direct = cayley.build_graph("pun", 3, 6)
    same = cayley.same_graph(collapse, direct)
    ok = all(sub.values()) and same
    return ok, f"subgraph n=2: {sub[2]}, n=3: {sub[3]}; collapse == PU_3 radius 6: {same} ({len(direct.vertices)} vertices)"


def check_growth() -> tuple[bool, str]:
    g = cayley.build_graph("ostar", 3, 64)
    series = cayley.ball_volumes(g, 64)
    fit = cayley.fit_exponent(series, 16, 64)
    dyadic = math.log2(series[64] / series[32])
    chain = True
    for n in (2, 3):
        graphs = {grp: cayley.build_graph(grp, n, r) for grp, r in (("pun", 16), ("ostar", 32), ("sun", 32))}
        chain &= all(cayley.inclusion_chain(n, k, graphs) for k in range(17))
    ok = 7.0 <= fit.slope <= 9.0 and 7.0 <= dyadic <= 9.0 and chain
    return ok, f"slope {fit.slope:.4f}, log2(b64/b32) {dyadic:.4f}, inclusion chain k<=16: {chain}"


def check_determinism(seed: int = 0) -> tuple[bool, str]:
    first = render(run_checks("quick", seed))
    second = render(run_checks("quick", seed))
    return first == second, f"two quick reports byte-identical: {first == second}"


CHECKS: dict[int, tuple[str, Callable[..., tuple[bool, str]], bool]] = {
    1: ("diagram counts", check_counts, False),
    2: ("three E-characterizations agree", check_E_characterizations, False),
    3: ("capping descent", check_capping_descent, False),
    4: ("bounded generation", check_generation, False),
    5: ("Hom(u^k,u^l) = Hom(v_k,v_l)", check_bridge, False),
    6: ("n=2 collapse, n=3 separation", check_rank_separation, False),
    7: ("diagonal group model", check_group_model, False),
    8: ("twisted fusion rules", check_fusion, True),
    9: ("highest weights", check_highest_weights, False),
    10: ("Cayley subgraph and collapse", check_cayley, False),
    11: ("growth exponent and inclusions", check_growth, False),
    12: ("deterministic reports", check_determinism, True),
}

TIERS = {"quick": tuple(range(1, 9)), "full": tuple(range(1, 13))}


def run_check(number: int, seed: int = 0) -> CheckResult:
    name, fn, seeded = CHECKS[number]
    start = time.perf_counter()
    passed, detail = fn(seed) if seeded else fn()
    return CheckResult(number, name, passed, detail, time.perf_counter() - start)


def run_checks(tier: str = "quick", seed: int = 0) -> list[CheckResult]:
    return [run_check(i, seed) for i in TIERS[tier]]


def render(results: list[CheckResult], timings: bool = False) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        extra = f" [{r.seconds:.2f}s]" if timings else ""
        lines.append(f"{status} {r.number:>2} {r.name}: {r.detail}{extra}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    return "\n".join(lines) + "\n"
