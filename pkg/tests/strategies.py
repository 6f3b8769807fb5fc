"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from ostar.diagrams import Pairing
from ostar.weights import GroupElement, Sector


@st.composite
def pairings(draw, max_points=8, k=None, l=None):
    if k is None or l is None:
        total = 2 * draw(st.integers(0, max_points // 2))
        k = draw(st.integers(0, total))
        l = total - k
    points = draw(st.permutations(range(k + l)))
    partner = [0] * (k + l)
    for a, b in zip(points[::2], points[1::2]):
        partner[a], partner[b] = b, a
    return Pairing(k, l, tuple(partner))


@st.composite
def dominant(draw, n=3, bound=2, total=None):
    lam = sorted(draw(st.lists(st.integers(-bound, bound), min_size=n, max_size=n)), reverse=True)
    return tuple(lam)


@st.composite
def l_elements(draw, n=3, bound=3):
    """Arbitrary elements of L_n."""
    lam = draw(st.lists(st.integers(-bound, bound), min_size=n - 1, max_size=n - 1))
    sector = draw(st.sampled_from([Sector.CIRC, Sector.TAU]))
    return GroupElement(tuple(lam) + (sector.coordinate_sum - sum(lam),), sector)


@st.composite
def dominant_l(draw, n=3, bound=2):
    """Dominant elements of L_n (sum 0 or 1)."""
    lam = draw(dominant(n, bound).filter(lambda w: sum(w) in (0, 1)))
    return GroupElement(lam, Sector.CIRC if sum(lam) == 0 else Sector.TAU)
