"""Exact weighted Riordan groups, Sheffer classification, and the
operator/functional calculus of graded polynomial sequences, at a fixed
truncation order over exact rationals or a prime field."""

from .errors import MathDomainError
from .functionals import (
    Functional,
    binomial_associate,
    check_geometric_dual,
    delta_functional,
    dual_basis,
    dual_characterization_check,
    eval_functional,
    functional_after_operator,
    functional_apply,
    functional_mul,
    functional_of_operator,
    functional_power,
    product_rule_check,
    product_rule_spanning_witness,
)
from .operators import (
    HPolyMatrix,
    appell_from_alpha,
    check_report,
    d_polynomials,
    dw_multiplier,
    finite_difference_matrix,
    is_appell,
    is_binomial,
    is_degree_decreasing,
    is_normalizing,
    is_sheffer,
    m_matrix,
    q_operator_matrix,
    sheffer_by_commutation,
    shifted_power_matrix,
    solve_conjugator,
    translation_matrix,
)
from .riordan import (
    RiordanPair,
    Weight,
    change_weight,
    column_series,
    generating_expansion,
    identity_pair,
    is_riordan,
    matrix_to_pair,
    pair_to_matrix,
    riordan_inv,
    riordan_mul,
)
from .scalars import Field, Scalar, extended_binomial, factorial_inv, q_binomial
from .series import INFINITY, Series
from .triangular import (
    Polynomial,
    TriMatrix,
    apply_matrix_to_poly,
    matrix_to_polys,
    polys_to_matrix,
    umbral_compose,
)
from .twoweight import (
    GammaSeq,
    GammaShape,
    TwoWeightReport,
    classify_gamma,
    classify_membership,
    exp_case_weights,
    gamma_sequence,
    is_exponential_alpha,
    tilde_weight_from_gamma,
)

__all__ = [
    "Field",
    "Functional",
    "GammaSeq",
    "GammaShape",
    "HPolyMatrix",
    "INFINITY",
    "MathDomainError",
    "Polynomial",
    "RiordanPair",
    "Scalar",
    "Series",
    "TriMatrix",
    "TwoWeightReport",
    "Weight",
    "appell_from_alpha",
    "apply_matrix_to_poly",
    "binomial_associate",
    "change_weight",
    "check_geometric_dual",
    "check_report",
    "classify_gamma",
    "classify_membership",
    "column_series",
    "d_polynomials",
    "delta_functional",
    "dual_basis",
    "dual_characterization_check",
    "dw_multiplier",
    "eval_functional",
    "exp_case_weights",
    "extended_binomial",
    "factorial_inv",
    "finite_difference_matrix",
    "functional_after_operator",
    "functional_apply",
    "functional_mul",
    "functional_of_operator",
    "functional_power",
    "gamma_sequence",
    "generating_expansion",
    "identity_pair",
    "is_appell",
    "is_binomial",
    "is_degree_decreasing",
    "is_exponential_alpha",
    "is_normalizing",
    "is_riordan",
    "is_sheffer",
    "m_matrix",
    "matrix_to_pair",
    "matrix_to_polys",
    "pair_to_matrix",
    "polys_to_matrix",
    "product_rule_check",
    "product_rule_spanning_witness",
    "q_binomial",
    "q_operator_matrix",
    "riordan_inv",
    "riordan_mul",
    "sheffer_by_commutation",
    "shifted_power_matrix",
    "solve_conjugator",
    "tilde_weight_from_gamma",
    "translation_matrix",
    "umbral_compose",
]

__version__ = "0.1.0"
