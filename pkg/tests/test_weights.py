import itertools

import pytest
from hypothesis import given, strategies as st

from ostar import weights as W
from ostar.config import MembershipError
from ostar.fusion import weyl_dim
from ostar.weights import GroupElement, Sector
from strategies import dominant, l_elements


@given(l_elements(), l_elements(), l_elements())
def test_group_axioms(a, b, c):
    assert W.multiply(W.multiply(a, b), c) == W.multiply(a, W.multiply(b, c))
    assert W.multiply(a, W.inverse(a)) == W.identity(3)
    assert W.multiply(a, b).in_L()


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
def test_generator_relations(i, j, k):
    g = [W.generator(x, 3) for x in (i, j, k)]
    assert W.multiply(g[0], g[0]) == W.identity(3)
    # abc = cba
    assert W.multiply(W.multiply(g[0], g[1]), g[2]) == W.multiply(W.multiply(g[2], g[1]), g[0])


def test_closed_formula_exhaustive():
    for length in range(7):
        for word in itertools.product((1, 2, 3), repeat=length):
            assert W.eval_word(word, 3) == W.eval_word_closed(word, 3)


def test_powers_of_g1g2_distinct():
    x = W.multiply(W.generator(1, 2), W.generator(2, 2))
    seen, power = set(), W.identity(2)
    for _ in range(51):
        assert power not in seen
        seen.add(power)
        power = W.multiply(power, x)


def test_membership():
    assert W.sector_of((1, 0, 0)) is Sector.TAU
    with pytest.raises(MembershipError):
        W.sector_of((1, 1, 0))
    with pytest.raises(MembershipError):
        GroupElement((1, 1, 0), Sector.TAU).check()
    with pytest.raises(MembershipError):
        W.multiply(GroupElement((2, 0, 0), Sector.CIRC), W.identity(3))


@given(l_elements(), l_elements())
def test_order_is_antisymmetric(a, b):
    if W.order_L(a, b) and W.order_L(b, a):
        assert a == b
    if a.sector is not b.sector:
        assert not W.order_L(a, b)


def test_order_examples():
    tau = Sector.TAU
    assert W.order_L(GroupElement((1, 0, 0), tau), GroupElement((0, 1, 0), tau))
    assert not W.order_L(GroupElement((0, 1, 0), tau), GroupElement((1, 0, 0), tau))


def count_gt_patterns(top):
    """Oracle: enumerate full Gelfand-Tsetlin patterns row by row."""
    if len(top) <= 1:
        return 1
    ranges = [range(top[i + 1], top[i] + 1) for i in range(len(top) - 1)]
    return sum(count_gt_patterns(row) for row in itertools.product(*ranges))


@given(dominant(n=3, bound=3))
def test_multiset_size_is_weyl_dimension(lam):
    ms = W.weight_multiset_Un(lam)
    assert sum(ms.values()) == weyl_dim(lam) == count_gt_patterns(lam)


@given(dominant(n=4, bound=2))
def test_multiset_is_symmetric(lam):
    ms = W.weight_multiset_Un(lam)
    for w, m in ms.items():
        for perm in itertools.permutations(w):
            assert ms[perm] == m


def test_highest_weight_unique_greatest():
    lw = GroupElement((1, 1, -2), Sector.CIRC)
    ms = W.weight_multiset_Ostar(lw)
    assert W.greatest_elements(ms) == [lw]
    assert sum(ms.values()) == 10


def test_json_roundtrip():
    a = GroupElement((2, 0, -1), Sector.TAU)
    assert GroupElement.from_json(a.to_json()) == a
