from fractions import Fraction

from hypothesis import strategies as st

small_ints = st.integers(-6, 6)
rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 6))
nonneg_rationals = st.builds(Fraction, st.integers(0, 12), st.integers(1, 6))


def vectors(n=2, elems=rationals):
    return st.tuples(*([elems] * n))
