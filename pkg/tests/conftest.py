import pytest
from hypothesis import settings, strategies as st
from gmpy2 import mpq

from qtoeplitz.quat import Quaternion
from qtoeplitz.toeplitz import ToeplitzQ

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(
    lambda a, b: mpq(a, b), st.integers(-6, 6), st.integers(1, 4)
)
quaternions = st.builds(Quaternion, small_rationals, small_rationals, small_rationals, small_rationals)


def vectors(n):
    return st.tuples(*[quaternions] * n)


@st.composite
def toeplitz(draw, n=None, min_n=1, max_n=4):
    n = n if n is not None else draw(st.integers(min_n, max_n))
    return ToeplitzQ(n, tuple(draw(st.lists(quaternions, min_size=2 * n - 1, max_size=2 * n - 1))))


@pytest.fixture
def seed():
    return 42
