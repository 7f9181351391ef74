"""The brute-force references themselves: determinism, containment, pincer."""

from fractions import Fraction

import pytest

from intlinalg import (
    Interval,
    IntervalMatrix,
    IntervalVector,
    RealMatrix,
    hull_exact,
    sample_members,
    vertex_det_range,
    vertex_det_singularity,
    vertex_system_hull,
)
from intlinalg.errors import SingularEndpointMatrix, SizeGuardExceeded


def iv(lo, hi):
    return Interval(Fraction(lo), Fraction(hi))


class TestSampling:
    def test_degenerate_matrix_sampling_is_constant(self):
        a = IntervalMatrix.degenerate(RealMatrix([[1, 2], [3, 4]]))
        b = IntervalVector.degenerate([5, 6])
        for smp in sample_members(a, b, seed=1, count=5):
            assert smp.matrix == a.lower()
            assert smp.rhs == (Fraction(5), Fraction(6))

    def test_seed_determinism(self):
        a = IntervalMatrix([[iv(0, 1), iv(-1, 1)], [iv(2, 3), iv(0, 0)]])
        b = IntervalVector([iv(-1, 1), iv(0, 2)])
        first = sample_members(a, b, seed=42, count=20)
        second = sample_members(a, b, seed=42, count=20)
        assert [(s.matrix, s.rhs) for s in first] == [
            (s.matrix, s.rhs) for s in second
        ]
        third = sample_members(a, b, seed=43, count=20)
        assert [(s.matrix, s.rhs) for s in first] != [
            (s.matrix, s.rhs) for s in third
        ]

    def test_samples_are_members(self):
        a = IntervalMatrix([[iv(0, 1), iv(-1, 1)], [iv(2, 3), iv(0, 0)]])
        b = IntervalVector([iv(-1, 1), iv(0, 2)])
        for smp in sample_members(a, b, seed=9, count=50):
            assert a.contains(smp.matrix)
            assert b.contains_point(smp.rhs)

    def test_count_validated(self):
        a = IntervalMatrix.identity(1)
        with pytest.raises(ValueError):
            sample_members(a, None, seed=0, count=0)


class TestVertexDeterminant:
    def test_identity_regular(self):
        assert not vertex_det_singularity(IntervalMatrix.identity(2))

    def test_unit_midpoint_full_radius_singular(self):
        a = IntervalMatrix.from_midpoint_radius(
            RealMatrix.identity(2), RealMatrix.ones(2, 2)
        )
        assert vertex_det_singularity(a)
        assert vertex_det_range(a).contains(0)

    def test_size_guard(self):
        with pytest.raises(SizeGuardExceeded):
            vertex_det_singularity(IntervalMatrix.identity(4))


class TestVertexSystemHull:
    def test_degenerate_point(self):
        a = IntervalMatrix.degenerate(RealMatrix([[2, 0], [0, 4]]))
        b = IntervalVector.degenerate([2, 4])
        box = vertex_system_hull(a, b)
        assert box == IntervalVector.degenerate([1, 1])

    def test_one_dimensional(self):
        a = IntervalMatrix([[iv(2, 4)]])
        b = IntervalVector([iv(2, 4)])
        assert vertex_system_hull(a, b) == IntervalVector(
            [Interval(Fraction(1, 2), Fraction(2))]
        )

    def test_singular_endpoint_rejected(self):
        a = IntervalMatrix([[iv(0, 1)]])
        with pytest.raises(SingularEndpointMatrix):
            vertex_system_hull(a, IntervalVector([iv(1, 1)]))

    def test_pincer_inside_true_hull(self):
        a = IntervalMatrix(
            [[iv(3, 4), iv(0, 1)], [iv(0, 1), iv(3, 4)]]
        )
        b = IntervalVector([iv(1, 2), iv(-1, 1)])
        inner = vertex_system_hull(a, b)
        outer = hull_exact(a, b).box
        assert outer.contains_box(inner)
