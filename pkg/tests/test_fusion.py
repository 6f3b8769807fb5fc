import pytest
from hypothesis import given, strategies as st

from ostar import fusion as F
from ostar.weights import GroupElement, Sector
from strategies import dominant, dominant_l

TAU, CIRC = Sector.TAU, Sector.CIRC


def pieri_box(lam):
    """Oracle: lam ⊗ e_1 by adding one box to any row that stays dominant."""
    out = []
    for i in range(len(lam)):
        nu = list(lam)
        nu[i] += 1
        if all(nu[j] >= nu[j + 1] for j in range(len(nu) - 1)):
            out.append(tuple(nu))
    return {nu: 1 for nu in out}


@given(dominant(n=3, bound=3))
def test_box_product_is_pieri(lam):
    assert F.tensor_Un(lam, (1, 0, 0)) == pieri_box(lam)


@given(dominant(n=3, bound=2), dominant(n=3, bound=2))
def test_lr_matches_characters(lam, mu):
    assert F.tensor_Un(lam, mu) == F.tensor_Un_by_characters(lam, mu)


@given(dominant(n=4, bound=1), dominant(n=4, bound=1))
def test_lr_matches_characters_n4(lam, mu):
    assert F.tensor_Un(lam, mu) == F.tensor_Un_by_characters(lam, mu)


@given(dominant(n=3, bound=2), dominant(n=3, bound=2))
def test_dimension_is_multiplicative(lam, mu):
    assert F.total_dim(F.tensor_Un(lam, mu)) == F.weyl_dim(lam) * F.weyl_dim(mu)
    assert F.tensor_Un(lam, mu) == F.tensor_Un(mu, lam)


def test_weyl_dimensions():
    assert F.weyl_dim((1, 0, 0)) == 3
    assert F.weyl_dim((1, 0, -1)) == 8
    assert F.weyl_dim((1, 1, -2)) == 10
    assert F.weyl_dim((2, 0, -1)) == 15


def test_twisted_fusion_example():
    u = F.fundamental(3)
    w = GroupElement((1, 1, -2), CIRC)
    # oracle route: conjugate w for the tau factor, then add one box
    left = {GroupElement(nu, TAU): m for nu, m in pieri_box(F.conjugate_Un(w.lam)).items()}
    right = {GroupElement(nu, TAU): m for nu, m in pieri_box(w.lam).items()}
    assert F.tensor_Ostar(u, w) == left
    assert F.tensor_Ostar(w, u) == right
    assert set(left) == {GroupElement((3, -1, -1), TAU), GroupElement((2, 0, -1), TAU)}
    assert set(right) == {GroupElement((2, 1, -2), TAU), GroupElement((1, 1, -1), TAU)}
    assert left != right


@given(dominant_l(), dominant_l(), dominant_l())
def test_twisted_associativity(a, b, c):
    lhs = F.tensor_Ostar_sums(F.tensor_Ostar(a, b), {c: 1})
    rhs = F.tensor_Ostar_sums({a: 1}, F.tensor_Ostar(b, c))
    assert lhs == rhs


@given(dominant_l(), dominant_l())
def test_conjugation_antihomomorphism(a, b):
    lhs = {}
    for x, m in F.tensor_Ostar(a, b).items():
        lhs[F.conjugate_Ostar(x)] = m
    rhs = F.tensor_Ostar(F.conjugate_Ostar(b), F.conjugate_Ostar(a))
    assert lhs == rhs


@given(dominant_l(), dominant_l())
def test_sector_and_dimension(a, b):
    dec = F.tensor_Ostar(a, b)
    assert all(x.sector is a.sector * b.sector for x in dec)
    assert F.total_dim(dec) == F.weyl_dim(a.lam) * F.weyl_dim(b.lam)


@pytest.mark.parametrize("n", [2, 3])
def test_power_matches_alternating_un(n):
    for k in range(6):
        ostar = F.decompose_power(n, k)
        un = F.decompose_power(n, k, side="Un_alternating")
        assert {x.lam: m for x, m in ostar.items()} == un


def test_hom_dimension_via_fusion():
    # Hom(1, u^⊗6) at n=3 is 6 and at n=2 is 5
    assert F.decompose_power(3, 6)[GroupElement((0, 0, 0), CIRC)] == 6
    assert F.decompose_power(2, 6)[GroupElement((0, 0), CIRC)] == 5


def test_rejects_non_dominant():
    with pytest.raises(ValueError):
        F.tensor_Un((0, 1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        F.decompose_power(3, 2, side="nope")
