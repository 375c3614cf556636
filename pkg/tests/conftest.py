import pytest

from hermcodes.bounds import ChainSearch
from hermcodes.curve import CurveModel
from hermcodes.riemann_roch import RRSpace
from hermcodes.weierstrass import MPSemigroup


class Ctx:
    """Curve + Q-selection + caches for one q, shared across the session."""

    def __init__(self, q: int):
        self.q = q
        self.curve = CurveModel(q)
        self.rr = RRSpace(self.curve, self.curve.x_zero_places[:3])
        self.sg = MPSemigroup(self.rr, seed=2024)
        self.search = ChainSearch(self.sg)


@pytest.fixture(scope="session")
def ctx3():
    return Ctx(3)


@pytest.fixture(scope="session")
def ctx4():
    return Ctx(4)
