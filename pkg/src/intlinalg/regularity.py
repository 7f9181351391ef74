"""Exact and sufficient-condition deciders for regularity, singularity,
and full column rank of interval matrices.

The exact deciders sweep orthants (one small exact LP per sign vector) and
return machine-checkable certificates: an orthant sign vector, a nonzero
kernel witness, and a concrete singular member matrix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

from .core import Certificate, Decision, Verdict
from .errors import NotSquare, PreconditionViolated, ShapeError, SingularMatrix
from .lp import GEQ, LEQ, Constraint, LinearProgram, lp_feasible
from .matrices import (
    IntervalMatrix,
    RealMatrix,
    SignVector,
    Vector,
    vec_abs,
)
from .spectral import (
    DEFAULT_TOL,
    extremal_singular_values,
    is_positive_definite_real,
    is_positive_semidefinite_real,
    rho_less_than,
    sqrt_up,
)


def _kernel_orthant_program(
    center: RealMatrix, radius: RealMatrix, s: SignVector
) -> LinearProgram:
    """Feasibility of a nonzero kernel vector in the orthant of sign s.

    Constraints: -R D_s x <= C x <= R D_s x, D_s x >= 0, e^T D_s x >= 1.
    """
    m, n = center.shape
    cons = []
    for i in range(m):
        upper = tuple(
            center.rows[i][j] - radius.rows[i][j] * s[j] for j in range(n)
        )
        cons.append(Constraint(upper, LEQ, Fraction(0)))
        lower = tuple(
            -center.rows[i][j] - radius.rows[i][j] * s[j] for j in range(n)
        )
        cons.append(Constraint(lower, LEQ, Fraction(0)))
    for j in range(n):
        row = tuple(
            Fraction(s[j]) if k == j else Fraction(0) for k in range(n)
        )
        cons.append(Constraint(row, GEQ, Fraction(0)))
    cons.append(
        Constraint(tuple(Fraction(s[j]) for j in range(n)), GEQ, Fraction(1))
    )
    return LinearProgram(objective=tuple([Fraction(0)] * n), constraints=tuple(cons))


def member_with_kernel_vector(
    matrix: IntervalMatrix, x: Vector, s: SignVector
) -> RealMatrix:
    """Member matrix M with M x = 0, built row by row from the witness.

    Row i picks a_i = center_i - t_i * (radius_i .* s) with
    t_i = (C x)_i / (R |x|)_i, which lands inside the bounds because the
    witness satisfies |C x| <= R |x| componentwise.
    """
    center, radius = matrix.midpoint_radius()
    cx = center.matvec(x)
    rx = radius.matvec(vec_abs(x))
    rows = []
    for i in range(matrix.m):
        t = cx[i] / rx[i] if rx[i] != 0 else Fraction(0)
        if rx[i] == 0 and cx[i] != 0:
            raise AssertionError("witness violates the kernel inequality")
        rows.append(
            [
                center.rows[i][j] - t * radius.rows[i][j] * s[j]
                for j in range(matrix.n)
            ]
        )
    member = RealMatrix(rows)
    assert matrix.contains(member)
    assert all(v == 0 for v in member.matvec(x))
    return member


def _kernel_search(matrix: IntervalMatrix) -> Optional[Tuple[SignVector, Vector]]:
    """First orthant (lexicographic) admitting a nonzero kernel witness."""
    center, radius = matrix.midpoint_radius()
    for s in SignVector.all(matrix.n):
        outcome = lp_feasible(_kernel_orthant_program(center, radius, s))
        if outcome.answer:
            return s, outcome.certificate.witness
    return None


def is_regular_exact(matrix: IntervalMatrix) -> Decision:
    """Every member nonsingular?  False comes with a singular member."""
    if not matrix.is_square():
        raise NotSquare("regularity is defined for square interval matrices")
    hit = _kernel_search(matrix)
    if hit is None:
        return Decision(True)
    s, x = hit
    member = member_with_kernel_vector(matrix, x, s)
    return Decision(
        False,
        Certificate(sign_vector=s.entries, witness=x, member=member),
    )


def has_full_column_rank_exact(matrix: IntervalMatrix) -> Decision:
    """Every member of full column rank?  Requires m >= n."""
    m, n = matrix.shape
    if m < n:
        raise ShapeError(f"full column rank needs m >= n, got {matrix.shape}")
    hit = _kernel_search(matrix)
    if hit is None:
        return Decision(True)
    s, x = hit
    member = member_with_kernel_vector(matrix, x, s)
    return Decision(
        False,
        Certificate(sign_vector=s.entries, witness=x, member=member),
    )


def regularity_sufficient(
    matrix: IntervalMatrix, cond: int, tol: Fraction = DEFAULT_TOL
) -> Verdict:
    """One of three polynomial sufficient conditions; Proven or Unknown."""
    if not matrix.is_square():
        raise NotSquare("regularity is defined for square interval matrices")
    center, radius = matrix.midpoint_radius()
    if cond == 1:
        try:
            inv = center.inverse()
        except SingularMatrix:
            return Verdict.unknown("midpoint matrix is singular")
        if rho_less_than(inv.abs() @ radius, 1):
            return Verdict.proven("spectral radius of |C^-1| R below one")
        return Verdict.unknown("spectral radius condition fails")
    if cond == 2:
        return _sigma_gap_verdict(center, radius, tol)
    if cond == 3:
        return _norm_gap_verdict(center, radius, tol)
    raise ValueError(f"unknown condition {cond}")


def _sigma_gap_verdict(
    center: RealMatrix, radius: RealMatrix, tol: Fraction
) -> Verdict:
    """sigma_max(R) < sigma_min(C) via enclosure comparison."""
    _, smax_r = extremal_singular_values(radius, tol)
    smin_c, _ = extremal_singular_values(center, tol)
    if smax_r.value.hi < smin_c.value.lo:
        return Verdict.proven("singular value gap certified")
    if smax_r.value.lo >= smin_c.value.hi:
        return Verdict.unknown("singular value condition fails")
    return Verdict.unknown("singular value enclosures straddle the threshold")


def _norm_gap_verdict(
    center: RealMatrix, radius: RealMatrix, tol: Fraction
) -> Verdict:
    """C^T C - ||R^T R|| I positive definite, for the Frobenius and spectral
    norms; the better verdict wins."""
    gram_c = center.transpose() @ center
    gram_r = radius.transpose() @ radius
    n = gram_c.n
    # Frobenius norm of R^T R is sqrt of an exact rational
    fro_sq = sum(
        (v * v for row in gram_r.rows for v in row), Fraction(0)
    )
    fro_up = sqrt_up(fro_sq, tol)
    shifted = gram_c - RealMatrix.identity(n).scale(fro_up)
    if is_positive_definite_real(shifted).is_proven:
        return Verdict.proven("norm gap certified (Frobenius)")
    # spectral norm of R^T R = lambda_max(R^T R) since it is symmetric PSD
    from .spectral import sym_eigen_range as point_eigen_range

    _, lam_max = point_eigen_range(gram_r, tol)
    shifted = gram_c - RealMatrix.identity(n).scale(lam_max.value.hi)
    if is_positive_definite_real(shifted).is_proven:
        return Verdict.proven("norm gap certified (spectral)")
    return Verdict.unknown("norm condition not certified")


def singularity_sufficient(
    matrix: IntervalMatrix, cond: int
) -> Verdict:
    """One of three polynomial sufficient conditions; Proven or Unknown."""
    if not matrix.is_square():
        raise NotSquare("singularity is defined for square interval matrices")
    center, radius = matrix.midpoint_radius()
    if cond == 1:
        try:
            inv = center.inverse()
        except SingularMatrix:
            return Verdict.proven("midpoint matrix itself is singular")
        product = inv.abs() @ radius
        if max(product.rows[j][j] for j in range(product.n)) >= 1:
            return Verdict.proven("diagonal of |C^-1| R reaches one")
        return Verdict.unknown("diagonal condition fails")
    if cond == 2:
        try:
            inv = (radius - center.abs()).inverse()
        except SingularMatrix:
            return Verdict.unknown("R - |C| is singular")
        if inv.is_nonnegative():
            return Verdict.proven("(R - |C|)^-1 is nonnegative")
        return Verdict.unknown("inverse has a negative entry")
    if cond == 3:
        gram_gap = radius.transpose() @ radius - center.transpose() @ center
        if is_positive_semidefinite_real(gram_gap):
            return Verdict.proven("R^T R - C^T C is positive semidefinite")
        return Verdict.unknown("semidefiniteness condition fails")
    raise ValueError(f"unknown condition {cond}")


def singular_candidate_search(matrix: IntervalMatrix) -> Optional[RealMatrix]:
    """Search rank-one corrections C - z z^T / (z^T C^-1 z) over sign vectors.

    Requires unit radius (R = all-ones) and an invertible midpoint; returns
    the first candidate that is singular and contained in the matrix.
    """
    if not matrix.is_square():
        raise NotSquare("candidate search is defined for square matrices")
    center, radius = matrix.midpoint_radius()
    if radius != RealMatrix.ones(*radius.shape):
        raise PreconditionViolated("candidate search needs unit radius")
    try:
        inv = center.inverse()
    except SingularMatrix:
        raise PreconditionViolated("candidate search needs an invertible midpoint")
    n = matrix.n
    # z and -z give the same candidate, so scan half the sign vectors
    for z in SignVector.half(n):
        zv = tuple(Fraction(e) for e in z)
        denom = sum(
            (zv[i] * inv.rows[i][j] * zv[j] for i in range(n) for j in range(n)),
            Fraction(0),
        )
        if denom == 0:
            continue
        candidate = RealMatrix(
            [
                [center.rows[i][j] - zv[i] * zv[j] / denom for j in range(n)]
                for i in range(n)
            ]
        )
        if matrix.contains(candidate) and candidate.det() == 0:
            return candidate
    return None


def pseudo_inverse_full_column_rank(matrix: RealMatrix) -> RealMatrix:
    """Moore-Penrose inverse of a full-column-rank matrix: (A^T A)^-1 A^T."""
    gram = matrix.transpose() @ matrix
    return gram.inverse() @ matrix.transpose()


def fcr_sufficient(
    matrix: IntervalMatrix, cond: int, tol: Fraction = DEFAULT_TOL
) -> Verdict:
    """Sufficient conditions for full column rank; Proven or Unknown."""
    center, radius = matrix.midpoint_radius()
    if cond == 1:
        if center.rank() < center.n:
            return Verdict.unknown("midpoint lacks full column rank")
        pinv = pseudo_inverse_full_column_rank(center)
        if rho_less_than(pinv.abs() @ radius, 1):
            return Verdict.proven("spectral radius of |C^+| R below one")
        return Verdict.unknown("spectral radius condition fails")
    if cond == 2:
        return _sigma_gap_verdict(center, radius, tol)
    raise ValueError(f"unknown condition {cond}")
