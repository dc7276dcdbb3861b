"""Moore-Penrose pseudoinverses through the CR factorization.

Exact over rationals, tolerance-based over 64-bit floats.  Three
pseudoinverse routes (reverse-order law on full-rank factors, the
always-correct projected product, and randomized sketching), verifiers
for the Penrose and Greville conditions, the Z-block generalized
inverse family, complete-solution formulas, and a benchmark harness.
"""

from .bench import (
    BenchConfig,
    BenchRecord,
    RandSvdSpec,
    emit_csv,
    gen_randsvd,
    read_records,
    run_bench,
    write_plot_data,
)
from .elimination import RrefResult, rank, rref
from .errors import (
    ConvergenceError,
    CrpinvError,
    DomainError,
    InconsistentSystemError,
    ShapeError,
    SingularMatrixError,
)
from .factorization import CrFactorization, complete_to_generalized, cr_factorize
from .fileio import (
    read_matrix,
    read_matrix_market,
    read_rational_text,
    write_matrix,
    write_matrix_market,
    write_rational_text,
)
from .kernels import active_backend, available_backends
from .matrices import (
    FLOAT,
    RATIONAL,
    domain_of,
    exact_eq,
    float_matrix,
    frobenius_norm,
    identity,
    mmul,
    rational_matrix,
    rel_diff,
    same_matrix,
    to_float,
    to_rational,
    zeros,
)
from .pseudoinverse import (
    GeneralizedInverseSpec,
    PenroseReport,
    check_greville,
    check_penrose,
    check_projection_equation,
    check_reverse_order_demands,
    generalized_inverse,
    pinv,
    pinv_always,
    pinv_rational_closed_form,
    pinv_reverse_order,
    solve_complete_adjoint,
    solve_complete_forward,
)
from .sketching import (
    SketchPair,
    SketchedPinvResult,
    pinv_sketched,
    rpinv,
    rsvd_pinv,
    sketched_pinv_factors,
    validate_rank_preserving,
)
from .subspaces import (
    SubspaceBasis,
    SubspaceKind,
    column_space_contains,
    same_column_space,
    subspace_basis,
)
from .svd import SvdResult, pinv_from_svd, svd, svd_pinv

__version__ = "0.1.0"

__all__ = [
    "BenchConfig",
    "BenchRecord",
    "ConvergenceError",
    "CrFactorization",
    "CrpinvError",
    "DomainError",
    "FLOAT",
    "GeneralizedInverseSpec",
    "InconsistentSystemError",
    "PenroseReport",
    "RATIONAL",
    "RandSvdSpec",
    "RrefResult",
    "ShapeError",
    "SingularMatrixError",
    "SketchPair",
    "SketchedPinvResult",
    "SubspaceBasis",
    "SubspaceKind",
    "SvdResult",
    "active_backend",
    "available_backends",
    "check_greville",
    "check_penrose",
    "check_projection_equation",
    "check_reverse_order_demands",
    "column_space_contains",
    "complete_to_generalized",
    "cr_factorize",
    "domain_of",
    "emit_csv",
    "exact_eq",
    "float_matrix",
    "frobenius_norm",
    "gen_randsvd",
    "generalized_inverse",
    "identity",
    "mmul",
    "pinv",
    "pinv_always",
    "pinv_from_svd",
    "pinv_rational_closed_form",
    "pinv_reverse_order",
    "pinv_sketched",
    "rank",
    "rational_matrix",
    "read_matrix",
    "read_matrix_market",
    "read_rational_text",
    "read_records",
    "rel_diff",
    "rpinv",
    "rref",
    "rsvd_pinv",
    "run_bench",
    "same_column_space",
    "same_matrix",
    "sketched_pinv_factors",
    "solve_complete_adjoint",
    "solve_complete_forward",
    "subspace_basis",
    "svd",
    "svd_pinv",
    "to_float",
    "to_rational",
    "validate_rank_preserving",
    "write_matrix",
    "write_matrix_market",
    "write_plot_data",
    "write_rational_text",
    "zeros",
]
