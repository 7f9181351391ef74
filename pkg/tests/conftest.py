"""Shared strategies and helpers for the test suite."""

from fractions import Fraction

import hypothesis.strategies as st

from intlinalg import Interval, IntervalMatrix, IntervalVector, RealMatrix


def rationals(max_num=12, max_den=8):
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def intervals(max_num=12, max_den=8):
    return st.builds(
        lambda a, b: Interval(min(a, b), max(a, b)),
        rationals(max_num, max_den),
        rationals(max_num, max_den),
    )


def interval_matrices(m, n, max_num=6, max_den=4):
    return st.lists(
        st.lists(intervals(max_num, max_den), min_size=n, max_size=n),
        min_size=m,
        max_size=m,
    ).map(IntervalMatrix)


def interval_vectors(m, max_num=6, max_den=4):
    return st.lists(intervals(max_num, max_den), min_size=m, max_size=m).map(
        IntervalVector
    )


def real_matrices(m, n, max_num=6, max_den=4):
    return st.lists(
        st.lists(rationals(max_num, max_den), min_size=n, max_size=n),
        min_size=m,
        max_size=m,
    ).map(RealMatrix)


def grid_sample(rng, interval: Interval, grid=1 << 10) -> Fraction:
    k = rng.randint(0, grid)
    return interval.lo + (interval.hi - interval.lo) * Fraction(k, grid)
