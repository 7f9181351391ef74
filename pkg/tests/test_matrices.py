"""Interval matrices, vertex members, exact matrix-vector ranges, file IO."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import grid_sample, interval_matrices, real_matrices
from intlinalg import (
    Interval,
    IntervalMatrix,
    IntervalVector,
    RealMatrix,
    SignVector,
    format_imx,
    parse_imx,
)
from intlinalg.errors import DimensionMismatch, ParseError
from intlinalg.oracles import vertex_matvec_hull


def iv(lo, hi):
    return Interval(Fraction(lo), Fraction(hi))


class TestMidpointRadius:
    def test_degenerate(self):
        m = RealMatrix([[1, 2], [3, 4]])
        a = IntervalMatrix.degenerate(m)
        center, radius = a.midpoint_radius()
        assert center == m
        assert radius == RealMatrix.zeros(2, 2)

    def test_single_entry(self):
        a = IntervalMatrix([[iv(0, 2)]])
        center, radius = a.midpoint_radius()
        assert center == RealMatrix([[1]])
        assert radius == RealMatrix([[1]])

    def test_componentwise(self):
        a = IntervalMatrix(
            [[iv(-1, 1), iv(3, 3)], [iv(0, 4), iv(-2, 0)]]
        )
        center, radius = a.midpoint_radius()
        assert center == RealMatrix([[0, 3], [2, -1]])
        assert radius == RealMatrix([[1, 0], [2, 1]])

    @given(a=interval_matrices(2, 3))
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, a):
        center, radius = a.midpoint_radius()
        assert IntervalMatrix.from_midpoint_radius(center, radius) == a


class TestVertexMatrix:
    def test_all_plus_gives_lower(self):
        a = IntervalMatrix([[iv(0, 2), iv(-1, 3)], [iv(1, 1), iv(-4, 0)]])
        e = SignVector.ones(2)
        assert a.vertex_matrix(e, e) == a.lower()
        assert a.vertex_matrix(e, -e) == a.upper()

    def test_all_sixteen_sign_pairs(self):
        rng = random.Random(99)
        entries = [
            [
                iv(rng.randint(-4, 0), rng.randint(1, 4))
                for _ in range(2)
            ]
            for _ in range(2)
        ]
        a = IntervalMatrix(entries)
        for y in SignVector.all(2):
            for z in SignVector.all(2):
                v = a.vertex_matrix(y, z)
                for i in range(2):
                    for j in range(2):
                        expected = (
                            entries[i][j].lo
                            if y[i] * z[j] == 1
                            else entries[i][j].hi
                        )
                        assert v[i, j] == expected
                assert a.contains(v)

    def test_dimension_mismatch(self):
        a = IntervalMatrix([[iv(0, 1)]])
        with pytest.raises(DimensionMismatch):
            a.vertex_matrix(SignVector.ones(2), SignVector.ones(1))


class TestContains:
    def test_midpoint_is_member(self):
        a = IntervalMatrix([[iv(0, 2), iv(-3, 1)], [iv(5, 5), iv(0, 1)]])
        center, _ = a.midpoint_radius()
        assert a.contains(center)

    def test_outside(self):
        assert not IntervalMatrix([[iv(0, 1)]]).contains(RealMatrix([[2]]))


class TestMatvec:
    def test_degenerate_matches_product(self):
        m = RealMatrix([[2, -1], [0, 3]])
        a = IntervalMatrix.degenerate(m)
        x = (Fraction(1), Fraction(-2))
        box = a.matvec_point(x)
        assert box.lower() == m.matvec(x) == box.upper()

    def test_row_formula(self):
        a = IntervalMatrix([[iv(0, 1), iv(1, 1)]])
        box = a.matvec_point((Fraction(1), Fraction(1)))
        assert box[0] == iv(1, 2)

    def test_vertex_hull_agreement_seeded(self):
        rng = random.Random(4242)
        for _ in range(25):
            entries = [
                [
                    iv(rng.randint(-3, 0), rng.randint(0, 3))
                    for _ in range(2)
                ]
                for _ in range(2)
            ]
            a = IntervalMatrix(entries)
            x = (
                Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            )
            assert a.matvec_point(x) == vertex_matvec_hull(a, x)

    def test_membership_sampling(self):
        rng = random.Random(7)
        a = IntervalMatrix([[iv(-1, 2), iv(0, 1)], [iv(1, 3), iv(-2, -1)]])
        x = (Fraction(3, 2), Fraction(-1, 3))
        box = a.matvec_point(x)
        for _ in range(200):
            member = RealMatrix(
                [[grid_sample(rng, e) for e in row] for row in a.entries]
            )
            assert box.contains_point(member.matvec(x))


class TestRealMatrix:
    @given(m=real_matrices(3, 3))
    @settings(max_examples=40, deadline=None)
    def test_det_respects_transpose(self, m):
        assert m.det() == m.transpose().det()

    def test_inverse_and_solve(self):
        m = RealMatrix([[2, 1], [1, 2]])
        inv = m.inverse()
        assert m @ inv == RealMatrix.identity(2)
        x = m.solve((Fraction(3), Fraction(3)))
        assert m.matvec(x) == (Fraction(3), Fraction(3))

    def test_rank(self):
        assert RealMatrix([[1, 2], [2, 4]]).rank() == 1
        assert RealMatrix([[1, 2], [0, 1]]).rank() == 2


class TestImxFormat:
    def test_example_round_trip(self):
        text = "# comment\n2 2\n0:2 3\n0:4 -2:0\n"
        a = parse_imx(text)
        assert parse_imx(format_imx(a)) == a

    @given(a=interval_matrices(3, 2, max_num=10**3, max_den=64))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_random(self, a):
        assert parse_imx(format_imx(a)) == a

    def test_vector_round_trip(self):
        v = IntervalVector([iv(1, 2), iv(-3, -3)])
        assert IntervalVector.from_matrix(parse_imx(format_imx(v.as_matrix()))) == v

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(ParseError) as err:
            parse_imx("2 2\n1 2\n1\n")
        assert "line 3" in str(err.value)
        with pytest.raises(ParseError):
            parse_imx("")
        with pytest.raises(ParseError):
            parse_imx("2\n1 2\n")
        with pytest.raises(ParseError) as err:
            parse_imx("1 1\n2:1\n")
        assert "line 2" in str(err.value)


class TestStructurePredicates:
    def test_band(self):
        tri = IntervalMatrix.degenerate(
            RealMatrix([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
        )
        assert tri.is_band(2)
        assert not tri.is_band(1)
        assert IntervalMatrix.degenerate(RealMatrix.diag([1, 2])).is_band(1)

    def test_sparse(self):
        a = IntervalMatrix.degenerate(RealMatrix([[1, 0], [1, 1]]))
        assert a.is_sparse(2)
        assert not a.is_sparse(1)
        # an interval straddling zero is not structurally zero
        b = IntervalMatrix([[iv(-1, 1), iv(0, 0)]])
        assert b.is_sparse(1)
        assert not IntervalMatrix([[iv(-1, 1), iv(0, 1)]]).is_sparse(1)


def test_sign_vector_enumeration_order():
    seen = list(SignVector.all(2))
    assert seen[0].entries == (1, 1)
    assert seen[-1].entries == (-1, -1)
    assert len(seen) == 4
    assert len(list(SignVector.half(3))) == 4
