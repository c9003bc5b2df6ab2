from fractions import Fraction as F

import pytest
from hypothesis import settings

from sfreecut import SDescription, SearchBox, SFreeBody

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

F14, F12 = F(1, 4), F(1, 2)


@pytest.fixture
def f1():
    return (F14, F12)


@pytest.fixture
def halfplane_S():
    """S = {x in Z^2 : x1 >= 0}."""
    return SDescription.from_rows([[-1, 0]], [0])


@pytest.fixture
def box5():
    return SearchBox.cube(2, 5)


@pytest.fixture
def wedge(f1):
    return SFreeBody(f1, [(4, 4), (4, -4)])


@pytest.fixture
def wide_wedge(f1):
    return SFreeBody(f1, [(4, 8), (4, -8)])


@pytest.fixture
def split_body(f1):
    return SFreeBody(f1, [(F(4, 3), 0), (-4, 0)])
