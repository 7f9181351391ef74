"""Exact rational toolkit for interval linear algebra.

Decision procedures, closed forms, sufficient conditions, and verified
enclosures for interval matrices, all over arbitrary-precision rationals.
"""

from .core import (
    Certificate,
    Decision,
    Interval,
    Rational,
    Verdict,
    format_interval,
    format_rational,
    interval_binop,
    interval_hull_of,
    parse_interval,
    parse_rational,
    rational,
)
from .matrices import (
    IntervalMatrix,
    IntervalVector,
    RealMatrix,
    SignVector,
    format_imx,
    format_imx_vector,
    parse_imx,
    parse_imx_vector,
)
from .lp import Constraint, LinearProgram, LpSolution, lp_feasible, lp_optimize
from .spectral import (
    DEFAULT_TOL,
    SpectralEnclosure,
    extremal_singular_values,
    is_positive_definite_real,
    is_positive_semidefinite_real,
    rho_less_than,
    spectral_radius,
)
from .regularity import (
    fcr_sufficient,
    has_full_column_rank_exact,
    is_regular_exact,
    regularity_sufficient,
    singular_candidate_search,
    singularity_sufficient,
)
from .systems import (
    ParametricSystem,
    SolveOptions,
    SolveReport,
    enclosure,
    hull_bidiagonal,
    hull_exact,
    ineq_solvability,
    is_solution,
    is_solution_parametric,
    lsq_enclosure,
    monotone_hull,
    solvability,
    solve_auto,
    tc_existence,
    tc_membership,
)
from .inverse import (
    IntervalInverse,
    det_range,
    inverse_enclosure,
    inverse_exact,
    inverse_nonneg,
    inverse_unit_midpoint,
)
from .eigen import (
    EigenRangeReport,
    SymmetricIntervalMatrix,
    hurwitz_general,
    hurwitz_sym,
    is_eigenvalue,
    is_eigenvector,
    is_perron_vector,
    schur_sym,
    spectral_radius_range,
    strong_pd,
    sym_eigen_range,
    weak_pd,
)
from .oracles import (
    SampledMember,
    sample_members,
    vertex_det_range,
    vertex_det_singularity,
    vertex_matvec_hull,
    vertex_system_hull,
)

__version__ = "0.1.0"
