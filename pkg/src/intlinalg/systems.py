"""Solution sets of interval linear systems.

Membership tests, the exact hull by orthant sweep, enclosure methods
(interval Gaussian elimination, Jacobi, Gauss-Seidel, Krawczyk, and the
Hansen-Bliek-Rohn style closed form), structured exact solvers, the
solvability suite with dual certificates, and tolerance/control solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .core import Certificate, Decision, Interval, as_vector
from .errors import (
    DiagonalContainsZero,
    DimensionMismatch,
    NoInitialEnclosure,
    NotBidiagonal,
    NotSquare,
    PivotContainsZero,
    PreconditionNotVerifiable,
    ShapeError,
    SingularMatrix,
    UnboundedSolutionSet,
)
from .lp import EQ, GEQ, LEQ, Constraint, LinearProgram, lp_feasible, lp_optimize
from .matrices import (
    IntervalMatrix,
    IntervalVector,
    RealMatrix,
    SignVector,
    Vector,
    vec_abs,
    vec_add,
    vec_sub,
)
from .regularity import has_full_column_rank_exact
from .spectral import rho_less_than

@dataclass
class SolveReport:
    box: Optional[IntervalVector]
    method: str
    exact: bool
    iterations: int
    insolvability_detected: bool
    converged: bool = True


@dataclass(frozen=True)
class SolveOptions:
    max_iter: int = 1000
    initial: Optional[IntervalVector] = None
    precondition: Optional[bool] = None


@dataclass(frozen=True)
class ParametricSystem:
    """Family sum_k p_k A^k x = sum_k p_k b^k with p ranging over a box."""

    a_terms: Tuple[RealMatrix, ...]
    b_terms: Tuple[Vector, ...]
    p_box: IntervalVector

    def __post_init__(self):
        if not self.a_terms:
            raise DimensionMismatch("parametric system needs at least one term")
        shape = self.a_terms[0].shape
        if any(a.shape != shape for a in self.a_terms):
            raise DimensionMismatch("parametric matrices must share a shape")
        if len(self.b_terms) != len(self.a_terms):
            raise DimensionMismatch("matrix/rhs term counts differ")
        if any(len(b) != shape[0] for b in self.b_terms):
            raise DimensionMismatch("rhs term length does not match rows")
        if self.p_box.dim != len(self.a_terms):
            raise DimensionMismatch("parameter box does not match term count")


def _check_system(matrix: IntervalMatrix, rhs: IntervalVector):
    if rhs.dim != matrix.m:
        raise DimensionMismatch(
            f"rhs of length {rhs.dim} does not match {matrix.m} rows"
        )


def is_solution(matrix: IntervalMatrix, rhs: IntervalVector, x: Sequence) -> bool:
    """Membership in the solution set: |C x - bc| <= R |x| + d, exactly."""
    _check_system(matrix, rhs)
    xs = as_vector(x)
    if len(xs) != matrix.n:
        raise DimensionMismatch("candidate length does not match columns")
    center, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    residual = vec_sub(center.matvec(xs), b_mid)
    slack = vec_add(radius.matvec(vec_abs(xs)), b_rad)
    return all(abs(r) <= s for r, s in zip(residual, slack))


def parametric_witness(system: ParametricSystem, x: Sequence) -> Optional[Vector]:
    """Parameter vector p in its box with A(p) x = b(p), or None."""
    xs = as_vector(x)
    if len(xs) != system.a_terms[0].n:
        raise DimensionMismatch("candidate length does not match columns")
    k = len(system.a_terms)
    m = system.a_terms[0].m
    # coefficient of p_k in row i is (A^k x - b^k)_i
    cols = [
        vec_sub(system.a_terms[t].matvec(xs), system.b_terms[t]) for t in range(k)
    ]
    cons = [
        Constraint(tuple(cols[t][i] for t in range(k)), EQ, Fraction(0))
        for i in range(m)
    ]
    bounds = tuple((e.lo, e.hi) for e in system.p_box.entries)
    outcome = lp_feasible(
        LinearProgram(tuple([Fraction(0)] * k), tuple(cons), bounds)
    )
    if not outcome.answer:
        return None
    return outcome.certificate.witness


def is_solution_parametric(system: ParametricSystem, x: Sequence) -> bool:
    return parametric_witness(system, x) is not None


# ---------------------------------------------------------------------------
# exact hull by orthant sweep


def _orthant_constraints(
    center: RealMatrix,
    radius: RealMatrix,
    b_mid: Vector,
    b_rad: Vector,
    s: SignVector,
) -> List[Constraint]:
    m, n = center.shape
    cons = []
    for i in range(m):
        row_up = tuple(
            center.rows[i][j] - radius.rows[i][j] * s[j] for j in range(n)
        )
        cons.append(Constraint(row_up, LEQ, b_mid[i] + b_rad[i]))
        row_dn = tuple(
            -center.rows[i][j] - radius.rows[i][j] * s[j] for j in range(n)
        )
        cons.append(Constraint(row_dn, LEQ, -b_mid[i] + b_rad[i]))
    for j in range(n):
        cons.append(
            Constraint(
                tuple(Fraction(s[j]) if t == j else Fraction(0) for t in range(n)),
                GEQ,
                Fraction(0),
            )
        )
    return cons


def hull_exact(matrix: IntervalMatrix, rhs: IntervalVector) -> SolveReport:
    """Componentwise-tightest box around the solution set (orthant LPs)."""
    _check_system(matrix, rhs)
    if not has_full_column_rank_exact(matrix).answer:
        raise UnboundedSolutionSet(
            "solution set may be unbounded: no full column rank"
        )
    center, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    n = matrix.n
    lo: List[Optional[Fraction]] = [None] * n
    hi: List[Optional[Fraction]] = [None] * n
    any_feasible = False
    for s in SignVector.all(n):
        cons = _orthant_constraints(center, radius, b_mid, b_rad, s)
        if not lp_feasible(LinearProgram(tuple([Fraction(0)] * n), tuple(cons))).answer:
            continue
        any_feasible = True
        for j in range(n):
            for direction in (1, -1):
                obj = tuple(
                    Fraction(direction) if t == j else Fraction(0) for t in range(n)
                )
                sol = lp_optimize(LinearProgram(obj, tuple(cons)))
                if sol.status != "optimal":
                    raise UnboundedSolutionSet(
                        "orthant optimization unbounded despite rank check"
                    )
                value = sol.x[j]
                if direction == 1:
                    hi[j] = value if hi[j] is None else max(hi[j], value)
                else:
                    lo[j] = value if lo[j] is None else min(lo[j], value)
    if not any_feasible:
        return SolveReport(None, "hull", True, 0, insolvability_detected=True)
    box = IntervalVector.from_bounds(tuple(lo), tuple(hi))
    return SolveReport(box, "hull", True, 0, insolvability_detected=False)


# ---------------------------------------------------------------------------
# structured exact solvers


def _bidiagonal_layout(matrix: IntervalMatrix) -> str:
    """Classify as 'diagonal', 'lower', or 'upper'; raise otherwise."""
    if not matrix.is_square():
        raise NotSquare("bidiagonal solver needs a square matrix")
    n = matrix.n
    lower_used = any(
        not matrix[i, i - 1].is_degenerate() or matrix[i, i - 1].lo != 0
        for i in range(1, n)
    )
    upper_used = any(
        not matrix[i, i + 1].is_degenerate() or matrix[i, i + 1].lo != 0
        for i in range(n - 1)
    )
    if lower_used and upper_used:
        raise NotBidiagonal("both neighbouring diagonals are populated")
    band = -1 if lower_used else (1 if upper_used else 0)
    for i in range(n):
        for j in range(n):
            if j == i or j - i == band:
                continue
            e = matrix[i, j]
            if not (e.is_degenerate() and e.lo == 0):
                raise NotBidiagonal(f"entry ({i},{j}) outside the band is nonzero")
    if any(matrix[i, i].contains_zero() for i in range(n)):
        raise DiagonalContainsZero("a diagonal entry contains zero")
    return {0: "diagonal", -1: "lower", 1: "upper"}[band]


def hull_bidiagonal(matrix: IntervalMatrix, rhs: IntervalVector) -> SolveReport:
    """Exact hull by interval substitution; every coefficient occurs once."""
    _check_system(matrix, rhs)
    layout = _bidiagonal_layout(matrix)
    n = matrix.n
    xs: List[Optional[Interval]] = [None] * n
    if layout in ("diagonal", "lower"):
        order = range(n)
        neighbour = -1
    else:
        order = range(n - 1, -1, -1)
        neighbour = 1
    for i in order:
        acc = rhs[i]
        j = i + neighbour
        if layout != "diagonal" and 0 <= j < n and xs[j] is not None:
            acc = acc - matrix[i, j] * xs[j]
        xs[i] = acc / matrix[i, i]
    method = "diagonal" if layout == "diagonal" else "bidiagonal"
    return SolveReport(IntervalVector(xs), method, True, 0, False)


def _inverse_nonneg_bounds(
    matrix: IntervalMatrix,
) -> Optional[Tuple[RealMatrix, RealMatrix]]:
    """(inverse lower bound, inverse upper bound) when both endpoint inverses
    exist and are nonnegative; None otherwise."""
    if not matrix.is_square():
        return None
    try:
        inv_lo = matrix.lower().inverse()
        inv_hi = matrix.upper().inverse()
    except SingularMatrix:
        return None
    if inv_lo.is_nonnegative() and inv_hi.is_nonnegative():
        return inv_hi, inv_lo
    return None


def is_interval_m_matrix(matrix: IntervalMatrix) -> bool:
    """Every member an M-matrix: nonpositive off-diagonal uppers and an
    M-matrix lower bound."""
    if not matrix.is_square():
        return False
    n = matrix.n
    upper = matrix.upper()
    if any(
        upper.rows[i][j] > 0 for i in range(n) for j in range(n) if i != j
    ):
        return False
    return matrix.lower().leading_minors_all_positive()


def monotone_hull(matrix: IntervalMatrix, rhs: IntervalVector) -> IntervalVector:
    """Exact hull for inverse-nonnegative matrices (M-matrices included).

    Inverse positivity makes each solution coordinate monotone in every
    coefficient with a sign governed by the solution's own sign pattern, so
    each hull face is attained at a column-endpoint member selected by a
    sign vector; sweeping all sign vectors and keeping sign-consistent
    solves yields the exact hull.
    """
    _check_system(matrix, rhs)
    if _inverse_nonneg_bounds(matrix) is None:
        raise PreconditionNotVerifiable(
            "monotone hull needs nonnegative endpoint inverses"
        )
    n = matrix.n
    lo_m = matrix.lower()
    hi_m = matrix.upper()
    b_lo = rhs.lower()
    b_hi = rhs.upper()

    def column_pick(z: SignVector, for_upper: bool) -> RealMatrix:
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                take_low = (z[j] == 1) if for_upper else (z[j] == -1)
                row.append(lo_m.rows[i][j] if take_low else hi_m.rows[i][j])
            rows.append(row)
        return RealMatrix(rows)

    best_hi: List[Optional[Fraction]] = [None] * n
    best_lo: List[Optional[Fraction]] = [None] * n
    for z in SignVector.all(n):
        xu = column_pick(z, for_upper=True).solve(b_hi)
        if all(z[j] * xu[j] >= 0 for j in range(n)):
            for j in range(n):
                if best_hi[j] is None or xu[j] > best_hi[j]:
                    best_hi[j] = xu[j]
        xl = column_pick(z, for_upper=False).solve(b_lo)
        if all(z[j] * xl[j] >= 0 for j in range(n)):
            for j in range(n):
                if best_lo[j] is None or xl[j] < best_lo[j]:
                    best_lo[j] = xl[j]
    if any(v is None for v in best_hi) or any(v is None for v in best_lo):
        raise AssertionError("no sign-consistent solve found")
    return IntervalVector.from_bounds(tuple(best_lo), tuple(best_hi))


# ---------------------------------------------------------------------------
# enclosure methods


def _box_add(a: IntervalVector, b: IntervalVector) -> IntervalVector:
    return IntervalVector([x + y for x, y in zip(a.entries, b.entries)])


def _box_shift(box: IntervalVector, v: Sequence[Fraction]) -> IntervalVector:
    return IntervalVector([e.shift(q) for e, q in zip(box.entries, v)])


def _real_matvec_box(c: RealMatrix, box: IntervalVector) -> IntervalVector:
    out = []
    for i in range(c.m):
        acc = Interval.point(0)
        for k in range(c.n):
            acc = acc + box[k].scale(c.rows[i][k])
        out.append(acc)
    return IntervalVector(out)


def _precondition(matrix: IntervalMatrix, rhs: IntervalVector):
    center, _ = matrix.midpoint_radius()
    try:
        inv = center.inverse()
    except SingularMatrix:
        raise PreconditionNotVerifiable("midpoint matrix is not invertible")
    pre_a = matrix.left_mul_real(inv)
    pre_b = IntervalVector.from_matrix(rhs.as_matrix().left_mul_real(inv))
    return inv, pre_a, pre_b


def _auto_initial(
    matrix: IntervalMatrix, rhs: IntervalVector, inv: RealMatrix
) -> IntervalVector:
    """Rigorous starting box when rho(|C| R) < 1 is provable."""
    _, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    p = inv.abs() @ radius
    if not rho_less_than(p, 1):
        raise NoInitialEnclosure(
            "no starting box: rho(|C| R) < 1 not provable and none supplied"
        )
    m2 = (RealMatrix.identity(matrix.n) - p).inverse()
    xc = inv.matvec(b_mid)
    q = inv.abs().matvec(b_rad)
    u = m2.matvec(vec_add(vec_abs(xc), q))
    box = IntervalVector.from_bounds(tuple(-v for v in u), u)
    spread = inv.abs().matvec(vec_add(radius.matvec(u), b_rad))
    centered = IntervalVector.from_bounds(vec_sub(xc, spread), vec_add(xc, spread))
    tight = box.intersect(centered)
    assert tight is not None
    return tight


def _interval_gauss_elimination(
    matrix: IntervalMatrix, rhs: IntervalVector
) -> IntervalVector:
    if not matrix.is_square():
        raise NotSquare("interval elimination needs a square matrix")
    n = matrix.n
    aug: List[List[Interval]] = [
        list(matrix.row(i)) + [rhs[i]] for i in range(n)
    ]
    for k in range(n):
        pivot_row = None
        pivot_mig = Fraction(0)
        for r in range(k, n):
            mig = aug[r][k].mig
            if mig > pivot_mig:
                pivot_mig = mig
                pivot_row = r
        if pivot_row is None:
            raise PivotContainsZero(f"all candidate pivots in column {k} contain zero")
        aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        for r in range(k + 1, n):
            if aug[r][k].is_degenerate() and aug[r][k].lo == 0:
                continue
            factor = aug[r][k] / aug[k][k]
            for c in range(k + 1, n + 1):
                aug[r][c] = aug[r][c] - factor * aug[k][c]
            aug[r][k] = Interval.point(0)
    xs: List[Optional[Interval]] = [None] * n
    for k in range(n - 1, -1, -1):
        acc = aug[k][n]
        for c in range(k + 1, n):
            acc = acc - aug[k][c] * xs[c]
        xs[k] = acc / aug[k][k]
    return IntervalVector(xs)


def _iterate(
    matrix: IntervalMatrix,
    rhs: IntervalVector,
    opts: SolveOptions,
    method: str,
) -> SolveReport:
    """Preconditioned Jacobi / Gauss-Seidel / Krawczyk iteration."""
    if not matrix.is_square():
        raise NotSquare("iterative methods need a square matrix")
    n = matrix.n
    if opts.precondition is False:
        pre_a, pre_b = matrix, rhs
        if opts.initial is None:
            raise NoInitialEnclosure("unpreconditioned iteration needs a start box")
        box = opts.initial
        inv = None
    else:
        inv, pre_a, pre_b = _precondition(matrix, rhs)
        box = opts.initial if opts.initial is not None else _auto_initial(
            matrix, rhs, inv
        )
    if method in ("jacobi", "gauss-seidel"):
        if any(pre_a[i, i].contains_zero() for i in range(n)):
            raise PivotContainsZero("a preconditioned diagonal entry contains zero")
    identity = IntervalMatrix.identity(n)
    iterations = 0
    while iterations < opts.max_iter:
        iterations += 1
        if method == "jacobi":
            new_entries: List[Interval] = []
            for i in range(n):
                acc = pre_b[i]
                for j in range(n):
                    if j != i:
                        acc = acc - pre_a[i, j] * box[j]
                new_entries.append(acc / pre_a[i, i])
            candidate = IntervalVector(new_entries)
        elif method == "gauss-seidel":
            work = list(box.entries)
            empty = False
            for i in range(n):
                acc = pre_b[i]
                for j in range(n):
                    if j != i:
                        acc = acc - pre_a[i, j] * work[j]
                cap = (acc / pre_a[i, i]).intersect(work[i])
                if cap is None:
                    empty = True
                    break
                work[i] = cap
            if empty:
                return SolveReport(None, method, False, iterations, True)
            candidate = IntervalVector(work)
        else:  # krawczyk
            mid, _ = box.midpoint_radius()
            exact_prod = pre_a.matvec_point(mid)
            residual = IntervalVector(
                [pre_b[i] - exact_prod[i] for i in range(n)]
            )
            gap = IntervalMatrix(
                [
                    [identity[i, j] - pre_a[i, j] for j in range(n)]
                    for i in range(n)
                ]
            )
            offset = IntervalVector([box[i].shift(-mid[i]) for i in range(n)])
            candidate = _box_shift(_box_add(residual, gap.matvec_box(offset)), mid)
        new_box = candidate.intersect(box)
        if new_box is None:
            return SolveReport(None, method, False, iterations, True)
        if new_box == box:
            return SolveReport(new_box, method, False, iterations, False)
        box = new_box
    return SolveReport(box, method, False, iterations, False, converged=False)


def _hbr_enclosure(matrix: IntervalMatrix, rhs: IntervalVector) -> SolveReport:
    """Closed-form enclosure under the proven contraction rho(|C| R) < 1."""
    if not matrix.is_square():
        raise NotSquare("the closed-form enclosure needs a square matrix")
    n = matrix.n
    center, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    try:
        inv = center.inverse()
    except SingularMatrix:
        raise PreconditionNotVerifiable("midpoint matrix is not invertible")
    p = inv.abs() @ radius
    if not rho_less_than(p, 1):
        raise PreconditionNotVerifiable("rho(|C| R) < 1 is not provable")
    m2 = (RealMatrix.identity(n) - p).inverse()
    xc = inv.matvec(b_mid)
    q = inv.abs().matvec(b_rad)
    xstar = m2.matvec(vec_add(vec_abs(xc), q))
    lo = []
    hi = []
    for i in range(n):
        pii = p.rows[i][i]
        up = xstar[i] + (xc[i] - abs(xc[i])) / (1 - pii)
        hi.append(max(up, (1 - pii) * up / (1 + pii)))
        dn = -xstar[i] + (xc[i] + abs(xc[i])) / (1 - pii)
        lo.append(min(dn, (1 - pii) * dn / (1 + pii)))
    box = IntervalVector.from_bounds(tuple(lo), tuple(hi))
    return SolveReport(box, "hbr", False, 0, False)


def enclosure(
    matrix: IntervalMatrix,
    rhs: IntervalVector,
    method: str,
    opts: SolveOptions = SolveOptions(),
) -> SolveReport:
    """A box containing the solution set, by the requested method."""
    _check_system(matrix, rhs)
    if method == "int-ge":
        box = _interval_gauss_elimination(matrix, rhs)
        return SolveReport(box, "int-ge", False, 0, False)
    if method == "hbr":
        return _hbr_enclosure(matrix, rhs)
    if method == "gauss-seidel" and opts.precondition is not True:
        if is_interval_m_matrix(matrix):
            box = monotone_hull(matrix, rhs)
            sweep = _plain_gs_sweep(matrix, rhs, box)
            assert sweep == box  # the exact hull is a fixpoint of the sweep
            return SolveReport(box, "gauss-seidel", True, 1, False)
    if method in ("jacobi", "gauss-seidel", "krawczyk"):
        return _iterate(matrix, rhs, opts, method)
    raise ValueError(f"unknown enclosure method {method!r}")


def _plain_gs_sweep(
    matrix: IntervalMatrix, rhs: IntervalVector, box: IntervalVector
) -> IntervalVector:
    """One unpreconditioned Gauss-Seidel sweep (0 must be outside the diagonal)."""
    n = matrix.n
    if any(matrix[i, i].contains_zero() for i in range(n)):
        raise DiagonalContainsZero("a diagonal entry contains zero")
    work = list(box.entries)
    for i in range(n):
        acc = rhs[i]
        for j in range(n):
            if j != i:
                acc = acc - matrix[i, j] * work[j]
        cap = (acc / matrix[i, i]).intersect(work[i])
        if cap is None:
            raise AssertionError("sweep emptied a hull coordinate")
        work[i] = cap
    return IntervalVector(work)


def lsq_enclosure(
    matrix: IntervalMatrix,
    rhs: IntervalVector,
    method: str = "krawczyk",
    opts: SolveOptions = SolveOptions(),
) -> SolveReport:
    """Enclosure of the least-squares solution set via interval normal equations."""
    _check_system(matrix, rhs)
    if matrix.m < matrix.n:
        raise ShapeError("least squares needs at least as many rows as columns")
    transposed = matrix.transpose()
    gram = transposed.matmul_interval(matrix)
    projected = IntervalVector.from_matrix(
        transposed.matmul_interval(rhs.as_matrix())
    )
    inner = enclosure(gram, projected, method, opts)
    return SolveReport(
        inner.box,
        f"lsq-{inner.method}",
        False,
        inner.iterations,
        inner.insolvability_detected,
        inner.converged,
    )


def solve_auto(
    matrix: IntervalMatrix, rhs: IntervalVector, opts: SolveOptions = SolveOptions()
) -> SolveReport:
    """Exact-first, cheapest-first dispatch across the solvers."""
    _check_system(matrix, rhs)
    if matrix.is_square():
        try:
            return hull_bidiagonal(matrix, rhs)
        except (NotBidiagonal, DiagonalContainsZero):
            pass
        if _inverse_nonneg_bounds(matrix) is not None:
            box = monotone_hull(matrix, rhs)
            return SolveReport(box, "inverse-nonneg", True, 0, False)
        try:
            return _hbr_enclosure(matrix, rhs)
        except PreconditionNotVerifiable:
            pass
    if matrix.n <= 10:
        return hull_exact(matrix, rhs)
    return enclosure(matrix, rhs, "krawczyk", opts)


# ---------------------------------------------------------------------------
# solvability


def _member_pair_for_solution(
    matrix: IntervalMatrix,
    rhs: IntervalVector,
    x: Vector,
    s: SignVector,
) -> Tuple[RealMatrix, Vector]:
    """Member system with A x = b exactly, from an orthant witness."""
    center, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    residual = vec_sub(center.matvec(x), b_mid)
    slack = vec_add(radius.matvec(vec_abs(x)), b_rad)
    rows = []
    b_out = []
    for i in range(matrix.m):
        t = residual[i] / slack[i] if slack[i] != 0 else Fraction(0)
        rows.append(
            [
                center.rows[i][j] - t * radius.rows[i][j] * s[j]
                for j in range(matrix.n)
            ]
        )
        b_out.append(b_mid[i] + t * b_rad[i])
    member = RealMatrix(rows)
    b_vec = tuple(b_out)
    assert matrix.contains(member)
    assert all(rhs[i].contains(b_vec[i]) for i in range(rhs.dim))
    assert member.matvec(x) == b_vec
    return member, b_vec


def solvability(matrix: IntervalMatrix, rhs: IntervalVector, mode: str) -> Decision:
    """Weak/strong (nonnegative) solvability of A x = b with certificates."""
    _check_system(matrix, rhs)
    center, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    m, n = matrix.shape
    if mode == "weak":
        for s in SignVector.all(n):
            cons = _orthant_constraints(center, radius, b_mid, b_rad, s)
            outcome = lp_feasible(LinearProgram(tuple([Fraction(0)] * n), tuple(cons)))
            if outcome.answer:
                x = outcome.certificate.witness
                member, b_vec = _member_pair_for_solution(matrix, rhs, x, s)
                return Decision(
                    True,
                    Certificate(
                        sign_vector=s.entries,
                        witness=x,
                        member=member,
                        rhs_member=b_vec,
                    ),
                )
        return Decision(False)
    if mode == "nonneg-weak":
        lower = matrix.lower()
        upper = matrix.upper()
        cons = [
            Constraint(lower.rows[i], LEQ, rhs[i].hi) for i in range(m)
        ] + [
            Constraint(upper.rows[i], GEQ, rhs[i].lo) for i in range(m)
        ]
        bounds = tuple((Fraction(0), None) for _ in range(n))
        outcome = lp_feasible(
            LinearProgram(tuple([Fraction(0)] * n), tuple(cons), bounds)
        )
        if not outcome.answer:
            return Decision(False)
        x = outcome.certificate.witness
        member, b_vec = _member_pair_for_solution(
            matrix, rhs, x, SignVector.ones(n)
        )
        return Decision(
            True, Certificate(witness=x, member=member, rhs_member=b_vec)
        )
    if mode in ("strong", "nonneg-strong"):
        return _strong_solvability(matrix, rhs, nonneg=(mode == "nonneg-strong"))
    raise ValueError(f"unknown solvability mode {mode!r}")


def _strong_solvability(
    matrix: IntervalMatrix, rhs: IntervalVector, nonneg: bool
) -> Decision:
    """Dual search: a Farkas vector p kills one member system; none proves all.

    For equations, an insolvable member exists iff some p admits a member
    with A^T p = 0 (A^T p >= 0 in the nonnegative-variable case) while some
    rhs gives b^T p <= -1; both tests linearize per sign orthant of p.
    """
    center, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    m, n = matrix.shape
    for s in SignVector.all(m):
        cons: List[Constraint] = []
        for j in range(n):
            col_c = tuple(center.rows[i][j] for i in range(m))
            col_r = tuple(radius.rows[i][j] * s[i] for i in range(m))
            if nonneg:
                row = tuple(c + r for c, r in zip(col_c, col_r))
                cons.append(Constraint(row, GEQ, Fraction(0)))
            else:
                cons.append(
                    Constraint(
                        tuple(c - r for c, r in zip(col_c, col_r)), LEQ, Fraction(0)
                    )
                )
                cons.append(
                    Constraint(
                        tuple(-c - r for c, r in zip(col_c, col_r)), LEQ, Fraction(0)
                    )
                )
        cons.append(
            Constraint(
                tuple(b_mid[i] - b_rad[i] * s[i] for i in range(m)),
                LEQ,
                Fraction(-1),
            )
        )
        for i in range(m):
            cons.append(
                Constraint(
                    tuple(
                        Fraction(s[i]) if t == i else Fraction(0) for t in range(m)
                    ),
                    GEQ,
                    Fraction(0),
                )
            )
        outcome = lp_feasible(LinearProgram(tuple([Fraction(0)] * m), tuple(cons)))
        if outcome.answer:
            p = outcome.certificate.witness
            member, b_vec = _refuting_member(matrix, rhs, p, s, nonneg)
            return Decision(
                False,
                Certificate(
                    sign_vector=s.entries, witness=p, member=member, rhs_member=b_vec
                ),
            )
    return Decision(True)


def _refuting_member(
    matrix: IntervalMatrix,
    rhs: IntervalVector,
    p: Vector,
    s: SignVector,
    nonneg: bool,
) -> Tuple[RealMatrix, Vector]:
    """Member system certified insolvable by the dual vector p."""
    center, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    m, n = matrix.shape
    rows = [[Fraction(0)] * n for _ in range(m)]
    if nonneg:
        for i in range(m):
            for j in range(n):
                rows[i][j] = center.rows[i][j] + radius.rows[i][j] * s[i]
    else:
        ctp = [
            sum((center.rows[i][j] * p[i] for i in range(m)), Fraction(0))
            for j in range(n)
        ]
        rtp = [
            sum((radius.rows[i][j] * s[i] * p[i] for i in range(m)), Fraction(0))
            for j in range(n)
        ]
        for j in range(n):
            t = ctp[j] / rtp[j] if rtp[j] != 0 else Fraction(0)
            for i in range(m):
                rows[i][j] = center.rows[i][j] - t * radius.rows[i][j] * s[i]
    member = RealMatrix(rows)
    b_vec = tuple(b_mid[i] - b_rad[i] * s[i] for i in range(m))
    assert matrix.contains(member)
    assert all(rhs[i].contains(b_vec[i]) for i in range(m))
    return member, b_vec


def ineq_solvability(
    matrix: IntervalMatrix, rhs: IntervalVector, mode: str
) -> Decision:
    """Solvability of A x <= b in the four weak/strong variants."""
    _check_system(matrix, rhs)
    center, radius = matrix.midpoint_radius()
    m, n = matrix.shape
    b_lo = rhs.lower()
    b_hi = rhs.upper()
    if mode == "weak":
        for s in SignVector.all(n):
            cons = [
                Constraint(
                    tuple(
                        center.rows[i][j] - radius.rows[i][j] * s[j]
                        for j in range(n)
                    ),
                    LEQ,
                    b_hi[i],
                )
                for i in range(m)
            ]
            for j in range(n):
                cons.append(
                    Constraint(
                        tuple(
                            Fraction(s[j]) if t == j else Fraction(0)
                            for t in range(n)
                        ),
                        GEQ,
                        Fraction(0),
                    )
                )
            outcome = lp_feasible(
                LinearProgram(tuple([Fraction(0)] * n), tuple(cons))
            )
            if outcome.answer:
                x = outcome.certificate.witness
                member = RealMatrix(
                    [
                        [
                            center.rows[i][j] - radius.rows[i][j] * s[j]
                            for j in range(n)
                        ]
                        for i in range(m)
                    ]
                )
                return Decision(
                    True,
                    Certificate(
                        sign_vector=s.entries,
                        witness=x,
                        member=member,
                        rhs_member=b_hi,
                    ),
                )
        return Decision(False)
    if mode == "strong":
        upper = matrix.upper()
        lower = matrix.lower()
        cons = [
            Constraint(tuple(upper.rows[i]) + tuple(-v for v in lower.rows[i]), LEQ, b_lo[i])
            for i in range(m)
        ]
        bounds = tuple((Fraction(0), None) for _ in range(2 * n))
        outcome = lp_feasible(
            LinearProgram(tuple([Fraction(0)] * (2 * n)), tuple(cons), bounds)
        )
        if not outcome.answer:
            return Decision(False)
        parts = outcome.certificate.witness
        x = tuple(parts[j] - parts[n + j] for j in range(n))
        _verify_universal_witness(matrix, b_lo, x)
        return Decision(True, Certificate(witness=x, note="universal witness"))
    if mode == "nonneg-weak":
        cons = [
            Constraint(matrix.lower().rows[i], LEQ, b_hi[i]) for i in range(m)
        ]
        bounds = tuple((Fraction(0), None) for _ in range(n))
        outcome = lp_feasible(
            LinearProgram(tuple([Fraction(0)] * n), tuple(cons), bounds)
        )
        if not outcome.answer:
            return Decision(False)
        return Decision(True, Certificate(witness=outcome.certificate.witness))
    if mode == "nonneg-strong":
        cons = [
            Constraint(matrix.upper().rows[i], LEQ, b_lo[i]) for i in range(m)
        ]
        bounds = tuple((Fraction(0), None) for _ in range(n))
        outcome = lp_feasible(
            LinearProgram(tuple([Fraction(0)] * n), tuple(cons), bounds)
        )
        if not outcome.answer:
            return Decision(False)
        x = outcome.certificate.witness
        _verify_universal_witness(matrix, b_lo, x)
        return Decision(True, Certificate(witness=x, note="universal witness"))
    raise ValueError(f"unknown inequality solvability mode {mode!r}")


def _verify_universal_witness(
    matrix: IntervalMatrix, b_lo: Vector, x: Vector
) -> None:
    """Check A_yz x <= lower rhs for every vertex member (small shapes), or
    the equivalent row-wise worst case otherwise."""
    m, n = matrix.shape
    if m + n <= 14:
        for y in SignVector.all(m):
            for z in SignVector.all(n):
                vals = matrix.vertex_matrix(y, z).matvec(x)
                assert all(v <= b for v, b in zip(vals, b_lo))
    else:
        worst = matrix.matvec_point(x).upper()
        assert all(v <= b for v, b in zip(worst, b_lo))


# ---------------------------------------------------------------------------
# tolerance and control solutions


def tc_membership(
    matrix: IntervalMatrix, rhs: IntervalVector, x: Sequence, kind: str
) -> bool:
    """Sign-flipped membership tests: range within rhs (tolerance) or
    rhs within range (control)."""
    _check_system(matrix, rhs)
    xs = as_vector(x)
    if len(xs) != matrix.n:
        raise DimensionMismatch("candidate length does not match columns")
    center, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    residual = vec_sub(center.matvec(xs), b_mid)
    spread = radius.matvec(vec_abs(xs))
    if kind == "tolerance":
        return all(
            abs(r) <= -s + d for r, s, d in zip(residual, spread, b_rad)
        )
    if kind == "control":
        return all(
            abs(r) <= s - d for r, s, d in zip(residual, spread, b_rad)
        )
    raise ValueError(f"unknown membership kind {kind!r}")


def tc_existence(matrix: IntervalMatrix, rhs: IntervalVector, kind: str) -> Decision:
    """Does a tolerance (one LP) or control (orthant sweep) solution exist?"""
    _check_system(matrix, rhs)
    center, radius = matrix.midpoint_radius()
    b_mid, b_rad = rhs.midpoint_radius()
    m, n = matrix.shape
    if kind == "tolerance":
        cons = []
        for i in range(m):
            plus = tuple(center.rows[i][j] + radius.rows[i][j] for j in range(n))
            minus = tuple(-center.rows[i][j] + radius.rows[i][j] for j in range(n))
            cons.append(Constraint(plus + minus, LEQ, b_mid[i] + b_rad[i]))
            cons.append(Constraint(minus + plus, LEQ, -b_mid[i] + b_rad[i]))
        bounds = tuple((Fraction(0), None) for _ in range(2 * n))
        outcome = lp_feasible(
            LinearProgram(tuple([Fraction(0)] * (2 * n)), tuple(cons), bounds)
        )
        if not outcome.answer:
            return Decision(False)
        parts = outcome.certificate.witness
        x = tuple(parts[j] - parts[n + j] for j in range(n))
        assert tc_membership(matrix, rhs, x, "tolerance")
        return Decision(True, Certificate(witness=x))
    if kind == "control":
        for s in SignVector.all(n):
            cons = []
            for i in range(m):
                row_up = tuple(
                    center.rows[i][j] - radius.rows[i][j] * s[j] for j in range(n)
                )
                cons.append(Constraint(row_up, LEQ, b_mid[i] - b_rad[i]))
                row_dn = tuple(
                    -center.rows[i][j] - radius.rows[i][j] * s[j] for j in range(n)
                )
                cons.append(Constraint(row_dn, LEQ, -b_mid[i] - b_rad[i]))
            for j in range(n):
                cons.append(
                    Constraint(
                        tuple(
                            Fraction(s[j]) if t == j else Fraction(0)
                            for t in range(n)
                        ),
                        GEQ,
                        Fraction(0),
                    )
                )
            outcome = lp_feasible(
                LinearProgram(tuple([Fraction(0)] * n), tuple(cons))
            )
            if outcome.answer:
                x = outcome.certificate.witness
                assert tc_membership(matrix, rhs, x, "control")
                return Decision(
                    True, Certificate(sign_vector=s.entries, witness=x)
                )
        return Decision(False)
    raise ValueError(f"unknown existence kind {kind!r}")
