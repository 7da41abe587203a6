"""
Shared fixtures: small fields and code parameters used across the suite.
"""

import pytest

from src.algebra.field import make_field
from src.codes.models import CodeParams


@pytest.fixture
def gf9():
    return make_field(3, 2)


@pytest.fixture
def gf25():
    return make_field(5, 2)


@pytest.fixture
def q3_m1():
    """q=3, lambda=1, m=1: n=4 over GF(9)."""
    return CodeParams.create(3, 1)


@pytest.fixture
def q3_m2():
    """q=3, lambda=1, a_2=2: n=8 over GF(9)."""
    return CodeParams.create(3, 1, (2,))
