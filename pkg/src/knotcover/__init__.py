"""
Exact invariants of knot-surgered 4-manifolds.

Everything exact is computed over the integers, rationals, or cyclotomic
fields, with every independently computable quantity cross-checked between
at least two routes; floats appear only in the Mahler-measure corner and are
themselves checked against the exact ladder.
"""
from .acceptance import CriterionResult, run_criteria
from .errors import CrossCheckMismatch, InternalError, VerificationFailed
from .exact_linalg import (
    AbelianGroup,
    BadRank,
    CycNumber,
    NonSquare,
    NotUnimodular,
    SmithForm,
    cokernel,
    companion_tau,
    cyc_det,
    det_exact,
    eval_at_zeta,
    mat_mul,
    mat_pow,
    matrix_inverse_unimodular,
    poly_at_matrix,
    smith_normal_form,
)
from .invariants import (
    FLOAT_REL_TOL,
    K3_TOPOLOGY,
    BundleData,
    DegenerateProduct,
    LiftIndex,
    ManifoldTopology,
    NonIntegralDimension,
    ParityViolation,
    RelativeInvariant,
    branched_cover_homology,
    cyclic_product_magnitude,
    dimension_zero_kappa,
    formal_dimension,
    is_coprime,
    k3_bundle_data,
    k3_invariant,
    kappa,
    lift_shift,
    q_fintushel_stern,
    q_relative,
    sign_complex_compare,
    sign_conjugate_bundle,
    sign_dual_compare,
    sign_lift_compare,
)
from .knots import (
    BraidSyntaxError,
    BraidWord,
    DegenerateMatrix,
    DuplicateName,
    IndexOutOfRange,
    KnotTable,
    NotAKnot,
    WirtingerPresentation,
    alexander_burau,
    alexander_checked,
    alexander_fox,
    braid_closure_wirtinger,
    parse_braid,
)
from .laurent_poly import (
    IntPoly,
    LaurentPoly,
    NotAKnotPolynomial,
    NotSymmetrizable,
    ZeroArgument,
    resultant,
    symmetrize_alexander,
)
from .mahler import (
    AsymptoticRow,
    NonConvergence,
    RootSet,
    SingularSample,
    asymptotic_table,
    mahler_measure_integral,
    mahler_measure_roots,
    poly_roots,
)
from .rep_variety import (
    CapExceeded,
    ChernSimonsLadder,
    Degenerate,
    FlatPoint,
    TorusElement,
    chern_simons_ladder,
    clock_shift,
    flat_points,
    kernel_torus_solutions,
    verify_t3_points,
    wirtinger_torus_count,
    wirtinger_torus_matrix,
)
from .series import (
    FractionalExponent,
    NonzeroConstantTerm,
    OrderExceeded,
    PowerSeries,
    donaldson_series_xk,
    extract_qk,
    ps_exp,
    witten_coefficient,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AsymptoticRow",
    "BadRank",
    "BraidSyntaxError",
    "BraidWord",
    "BundleData",
    "CapExceeded",
    "ChernSimonsLadder",
    "CriterionResult",
    "CrossCheckMismatch",
    "CycNumber",
    "Degenerate",
    "DegenerateMatrix",
    "DegenerateProduct",
    "DuplicateName",
    "FLOAT_REL_TOL",
    "FlatPoint",
    "FractionalExponent",
    "IndexOutOfRange",
    "IntPoly",
    "InternalError",
    "K3_TOPOLOGY",
    "KnotTable",
    "LaurentPoly",
    "LiftIndex",
    "ManifoldTopology",
    "NonConvergence",
    "NonIntegralDimension",
    "NonSquare",
    "NonzeroConstantTerm",
    "NotAKnot",
    "NotAKnotPolynomial",
    "NotSymmetrizable",
    "NotUnimodular",
    "OrderExceeded",
    "ParityViolation",
    "PowerSeries",
    "RelativeInvariant",
    "RootSet",
    "SingularSample",
    "SmithForm",
    "TorusElement",
    "VerificationFailed",
    "WirtingerPresentation",
    "ZeroArgument",
    "alexander_burau",
    "alexander_checked",
    "alexander_fox",
    "asymptotic_table",
    "braid_closure_wirtinger",
    "branched_cover_homology",
    "chern_simons_ladder",
    "clock_shift",
    "cokernel",
    "companion_tau",
    "cyc_det",
    "cyclic_product_magnitude",
    "det_exact",
    "dimension_zero_kappa",
    "donaldson_series_xk",
    "eval_at_zeta",
    "extract_qk",
    "flat_points",
    "formal_dimension",
    "is_coprime",
    "k3_bundle_data",
    "k3_invariant",
    "kappa",
    "kernel_torus_solutions",
    "lift_shift",
    "mahler_measure_integral",
    "mahler_measure_roots",
    "mat_mul",
    "mat_pow",
    "matrix_inverse_unimodular",
    "parse_braid",
    "poly_at_matrix",
    "poly_roots",
    "ps_exp",
    "q_fintushel_stern",
    "q_relative",
    "resultant",
    "run_criteria",
    "sign_complex_compare",
    "sign_conjugate_bundle",
    "sign_dual_compare",
    "sign_lift_compare",
    "smith_normal_form",
    "symmetrize_alexander",
    "verify_t3_points",
    "witten_coefficient",
    "wirtinger_torus_count",
    "wirtinger_torus_matrix",
]
