"""Exact decision of whether every isometry of a bilinear form has
determinant one, over Q or F_p (p odd), with a brute-force finite-field
oracle for ground truth."""

from .blocks import (
    PolySpec,
    ZeroConstantTermError,
    direct_sum,
    frobenius,
    gamma,
    is_cosquare_block,
    jordan,
    kronecker_pair_blocks,
    reciprocal,
    skew_sum,
    symplectic_unit,
)
from .decide import (
    DecisionReport,
    GammaExhaustedError,
    Method,
    NoOddBlockError,
    certificate_singular,
    decide,
    decide_gamma_shift,
    odd_unipotent_counts,
    skew_fast_path,
    verify_certificate,
)
from .exactmat import (
    GF,
    QQ,
    Field,
    FieldError,
    Matrix,
    Poly,
    SingularMatrixError,
    det,
    det_poly,
    inverse,
    nullspace,
    power_rank_sequence,
    rank,
    solve,
)
from .oracle import (
    BudgetExceededError,
    BulkOracle,
    IsometrySummary,
    enumerate_isometries,
    oracle_verdict,
    random_congruence,
    random_transform,
)
from .regularize import RegularizationResult, regularize, verify_congruence

__all__ = [
    "GF", "QQ", "Field", "FieldError", "Matrix", "Poly", "SingularMatrixError",
    "det", "det_poly", "inverse", "nullspace", "power_rank_sequence", "rank", "solve",
    "PolySpec", "ZeroConstantTermError", "direct_sum", "frobenius", "gamma",
    "is_cosquare_block", "jordan", "kronecker_pair_blocks", "reciprocal",
    "skew_sum", "symplectic_unit",
    "RegularizationResult", "regularize", "verify_congruence",
    "DecisionReport", "GammaExhaustedError", "Method", "NoOddBlockError",
    "certificate_singular", "decide", "decide_gamma_shift", "odd_unipotent_counts",
    "skew_fast_path", "verify_certificate",
    "BudgetExceededError", "BulkOracle", "IsometrySummary",
    "enumerate_isometries", "oracle_verdict", "random_congruence",
    "random_transform",
]
