"""Interval matrix inverse and determinant range.

The vertex-exact inverse enumerates the 2^(2n) endpoint-pattern members;
two closed forms (unit midpoint, inverse-nonnegative) cover the known
polynomial classes; a per-column system solve gives a general enclosure.
The exact determinant range enumerates entry-endpoint matrices at desk
scale, with an interval-elimination superset as the scalable fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .core import Certificate, Decision, Interval
from .errors import (
    NotSquare,
    PivotContainsZero,
    SingularIntervalMatrix,
    SingularMatrix,
    SizeGuardExceeded,
    SpectralRadiusNotProven,
)
from .matrices import (
    IntervalMatrix,
    IntervalVector,
    RealMatrix,
    SignVector,
    componentwise_max,
    componentwise_min,
)
from .regularity import is_regular_exact
from .spectral import rho_less_than
from .systems import SolveOptions, enclosure

VERTEX_INVERSE_GUARD = 6
EXACT_DET_GUARD = 3


@dataclass(frozen=True)
class IntervalInverse:
    matrix: IntervalMatrix
    exact: bool
    method: str


def inverse_exact(matrix: IntervalMatrix) -> IntervalInverse:
    """Componentwise min/max of the endpoint-pattern member inverses."""
    if not matrix.is_square():
        raise NotSquare("inverse of a non-square interval matrix")
    if matrix.n > VERTEX_INVERSE_GUARD:
        raise SizeGuardExceeded(
            f"vertex inverse guarded to n <= {VERTEX_INVERSE_GUARD}"
        )
    if not is_regular_exact(matrix).answer:
        raise SingularIntervalMatrix("interval matrix contains a singular member")
    lower: Optional[RealMatrix] = None
    upper: Optional[RealMatrix] = None
    for y in SignVector.all(matrix.n):
        for z in SignVector.all(matrix.n):
            inv = matrix.vertex_matrix(y, z).inverse()
            if lower is None:
                lower = inv
                upper = inv
            else:
                lower = componentwise_min(lower, inv)
                upper = componentwise_max(upper, inv)
    return IntervalInverse(
        IntervalMatrix.from_bounds(lower, upper), exact=True, method="vertex"
    )


def inverse_unit_midpoint(radius: RealMatrix) -> IntervalInverse:
    """Exact inverse of [I - R, I + R] from M = (I - R)^(-1).

    Bounds: lower = -M + diag(k), upper = M with k_j = 2 m_jj^2 / (2 m_jj - 1).
    """
    if not radius.is_square():
        raise NotSquare("radius matrix must be square")
    if not radius.is_nonnegative():
        raise SpectralRadiusNotProven("radius matrix must be nonnegative")
    if not rho_less_than(radius, 1):
        raise SpectralRadiusNotProven("rho(R) < 1 is not provable")
    n = radius.n
    m = (RealMatrix.identity(n) - radius).inverse()
    k = [2 * m.rows[j][j] ** 2 / (2 * m.rows[j][j] - 1) for j in range(n)]
    lower = -m + RealMatrix.diag(k)
    upper = m
    return IntervalInverse(
        IntervalMatrix.from_bounds(lower, upper), exact=True, method="unit-midpoint"
    )


def inverse_nonneg(matrix: IntervalMatrix) -> Decision:
    """Decide inverse nonnegativity; on success carry the exact inverse.

    Both endpoint matrices regular with nonnegative inverses certifies that
    every member is, and the inverse equals [upper^-1, lower^-1].
    """
    if not matrix.is_square():
        raise NotSquare("inverse nonnegativity needs a square matrix")
    try:
        inv_lo = matrix.lower().inverse()
        inv_hi = matrix.upper().inverse()
    except SingularMatrix:
        return Decision(False, Certificate(note="an endpoint matrix is singular"))
    if not (inv_lo.is_nonnegative() and inv_hi.is_nonnegative()):
        return Decision(
            False, Certificate(note="an endpoint inverse has a negative entry")
        )
    box = IntervalInverse(
        IntervalMatrix.from_bounds(inv_hi, inv_lo), exact=True, method="inverse-nonneg"
    )
    return Decision(True, Certificate(member=box, note="endpoint inverses nonnegative"))


def inverse_enclosure(
    matrix: IntervalMatrix,
    method: str = "krawczyk",
    opts: SolveOptions = SolveOptions(),
) -> IntervalInverse:
    """Columnwise enclosure: column i solves A x = e_i."""
    if not matrix.is_square():
        raise NotSquare("inverse of a non-square interval matrix")
    n = matrix.n
    columns: List[IntervalVector] = []
    for i in range(n):
        unit = [Fraction(0)] * n
        unit[i] = Fraction(1)
        report = enclosure(matrix, IntervalVector.degenerate(unit), method, opts)
        if report.box is None:
            raise SingularIntervalMatrix(
                "column enclosure became empty; matrix has no inverse"
            )
        columns.append(report.box)
    entries = [[columns[j][i] for j in range(n)] for i in range(n)]
    return IntervalInverse(IntervalMatrix(entries), exact=False, method=method)


def det_range(matrix: IntervalMatrix, method: str = "exact") -> Interval:
    """Determinant range: exact endpoint enumeration or elimination superset."""
    if not matrix.is_square():
        raise NotSquare("determinant of a non-square interval matrix")
    if method == "exact":
        if matrix.n > EXACT_DET_GUARD:
            raise SizeGuardExceeded(
                f"exact determinant range guarded to n <= {EXACT_DET_GUARD}"
            )
        from .oracles import endpoint_matrices

        values = [member.det() for member in endpoint_matrices(matrix)]
        return Interval(min(values), max(values))
    if method == "enclosure":
        return _det_enclosure(matrix)
    raise ValueError(f"unknown determinant method {method!r}")


def _det_enclosure(matrix: IntervalMatrix) -> Interval:
    """Product of interval elimination pivots (a superset of the range)."""
    n = matrix.n
    work: List[List[Interval]] = [list(row) for row in matrix.entries]
    sign = 1
    result = Interval.point(1)
    for k in range(n):
        pivot_row = None
        pivot_mig = Fraction(0)
        for r in range(k, n):
            mig = work[r][k].mig
            if mig > pivot_mig:
                pivot_mig = mig
                pivot_row = r
        if pivot_row is None:
            raise PivotContainsZero(f"all candidate pivots in column {k} contain zero")
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
            sign = -sign
        result = result * work[k][k]
        for r in range(k + 1, n):
            if work[r][k].is_degenerate() and work[r][k].lo == 0:
                continue
            factor = work[r][k] / work[k][k]
            for c in range(k + 1, n):
                work[r][c] = work[r][c] - factor * work[k][c]
            work[r][k] = Interval.point(0)
    return result.scale(sign)
