import itertools
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from ostar import diagrams as D
from ostar.diagrams import Pairing
from strategies import pairings


def double_factorial(x):
    return 1 if x <= 0 else x * double_factorial(x - 2)


def all_matchings(m):
    """Oracle: every fixed-point-free involution of range(m), via permutations."""
    seen = set()
    for perm in itertools.permutations(range(m)):
        partner = [0] * m
        for a, b in zip(perm[::2], perm[1::2]):
            partner[a], partner[b] = b, a
        seen.add(tuple(partner))
    return seen


def crosses(p, a, b):
    c, d = p.partner[a], p.partner[b]
    lo, hi = sorted((a, c))
    return (lo < b < hi) != (lo < d < hi)


@pytest.mark.parametrize("k,l", [(0, 0), (1, 1), (2, 0), (0, 4), (2, 2), (3, 3), (1, 5), (4, 2)])
def test_P_matches_permutation_oracle(k, l):
    found = {p.partner for p in D.enumerate_pairings(k, l, "P")}
    assert found == all_matchings(k + l)


@pytest.mark.parametrize("k,l", [(0, 2), (2, 2), (3, 3), (0, 6), (4, 4), (5, 3), (0, 10)])
def test_counts(k, l):
    s = (k + l) // 2
    assert len(D.enumerate_pairings(k, l, "P")) == double_factorial(2 * s - 1)
    assert len(D.enumerate_pairings(k, l, "E")) == factorial(s)
    assert len(D.enumerate_pairings(k, l, "N")) == comb(2 * s, s) // (s + 1)


@pytest.mark.parametrize("k,l", [(1, 0), (2, 1), (0, 5)])
def test_odd_total_is_empty(k, l):
    for cls in "PEN":
        assert len(D.enumerate_pairings(k, l, cls)) == 0


def test_classes_nest():
    for k, l in [(3, 3), (2, 4), (0, 8)]:
        P, E, N = (D.enumerate_pairings(k, l, c).as_set() for c in "PEN")
        assert N <= E <= P


def test_named_diagrams():
    assert D.classify(D.crossing()) is D.DiagramClass.P_ONLY
    assert D.classify(D.p3()) is D.DiagramClass.E_NOT_N
    assert D.classify(D.identity(3)) is D.DiagramClass.N
    assert D.crossing_counts(D.p3()) == [2, 2, 2]
    assert D.p3() in D.enumerate_pairings(3, 3, "E")


def test_numbering_convention():
    # bottom 1..l left to right, top l+1..l+k right to left
    ident = D.identity(2)
    assert ident.pairs() == [(1, 4), (2, 3)]
    assert ident.position(2) == ("top", 1)


@given(pairings(max_points=10))
def test_three_E_characterizations(p):
    assert D.has_even_crossings(p) == D.has_even_gaps(p) == D.is_alternating(p)


@given(pairings(max_points=10))
def test_crossing_count_against_direct_count(p):
    m = p.size
    for a in range(m):
        expected = sum(crosses(p, a, b) for b in range(m) if b not in (a, p.partner[a])) // 1
        # every crossing string is met at both of its ends
        assert D.crossing_count(p, a + 1) == expected // 2


@given(pairings(max_points=10))
def test_classify_is_rotation_invariant(p):
    assert D.classify(D.rotate(p)) is D.classify(p)


@given(pairings(max_points=8))
def test_involution_twice(p):
    assert D.involute(D.involute(p)) == p
    assert D.classify(D.involute(p)) is D.classify(p)


@given(pairings(max_points=8))
def test_json_roundtrip(p):
    assert Pairing.from_json(p.to_json()) == p


@given(pairings(max_points=8), st.integers(1, 8))
def test_capping_keeps_class_up(p, i):
    if p.size < 2:
        return
    q = D.cap(p, i)
    assert q.size == p.size - 2
    # capping never leaves the class: E and N are closed categories
    for cls in "EN":
        if D.classify(p).belongs_to(cls):
            assert D.classify(q).belongs_to(cls)


@given(st.data())
def test_compose_with_identity(data):
    p = data.draw(pairings(max_points=8))
    left, loops = D.compose(D.identity(p.l), p)
    right, loops2 = D.compose(p, D.identity(p.k))
    assert (left, loops) == (p, 0)
    assert (right, loops2) == (p, 0)


def test_compose_loop():
    assert D.compose(D.cup(), D.cap_arc()) == (Pairing(0, 0, ()), 1)
    outer, loops = D.compose(D.cap_arc(), D.cup())
    assert loops == 0 and outer.signature == (2, 2)


@given(st.data())
def test_compose_associative(data):
    a = data.draw(pairings(k=2, l=2))
    b = data.draw(pairings(k=2, l=4))
    c = data.draw(pairings(k=4, l=0))
    ba, x = D.compose(b, a)
    cb, y = D.compose(c, b)
    lhs, x2 = D.compose(c, ba)
    rhs, y2 = D.compose(cb, a)
    assert lhs == rhs and x + x2 == y + y2


@given(st.data())
def test_E_closed_under_composition(data):
    a = data.draw(pairings(k=3, l=3).filter(D.has_even_crossings))
    b = data.draw(pairings(k=3, l=3).filter(D.has_even_crossings))
    assert D.has_even_crossings(D.compose(b, a)[0])
    assert D.has_even_crossings(D.tensor(a, b))


def test_generation_at_bound_six():
    gen = D.generate(D.crossing(), 6)
    for (k, l), found in gen.items():
        assert found.as_set() == D.enumerate_pairings(k, l, "P").as_set()
    gen = D.generate(D.p3(), 6)
    assert gen[(3, 3)].as_set() == D.enumerate_pairings(3, 3, "E").as_set()
    assert len(gen[(0, 6)]) == 6


def test_invalid_pairing_rejected():
    with pytest.raises(ValueError):
        Pairing(1, 1, (0, 1))
    with pytest.raises(ValueError):
        Pairing.from_pairs(2, 2, [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        D.compose(D.identity(2), D.identity(3))
