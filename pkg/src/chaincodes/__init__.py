"""Exact arithmetic for cyclic codes over the chain rings Z_{p^e}:
factorization of x^n - 1 by Hensel lifting, duadic splittings, and
construction plus verification of isodual and self-dual codes."""

from .code import (
    Codeword,
    CyclicCode,
    IsodualCertificate,
    TooLarge,
    ZeroCode,
    apply_multiplier,
    apply_scaling,
    cardinality_log,
    certify_isodual,
    contains,
    dual,
    enumerate_codewords,
    from_generator,
    from_two_stage,
    generator_matrix,
    inner_product,
    is_self_dual,
    search_equivalence,
    search_multiplier_equivalence,
)
from .constructions import (
    ConstructedCode,
    ConstructionResult,
    duadic_lift,
    duadic_pair,
    oddlike_generator_matrix,
    remark46_code,
    thm42_isodual,
    thm44_isodual,
    thm510_isodual,
    two_stage_generator_matrix,
    verify_result,
)
from .exhaustive import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    WeightReport,
    annihilator_count,
    annihilator_vectors,
    enumerate_matrix,
    enumeration_cost,
    min_hamming_weight,
    min_weight_direct,
    min_weight_residue,
)
from .fieldpoly import (
    CosetPartition,
    FqPoly,
    Splitting,
    cyclotomic_cosets,
    factor_xn_minus_1,
    find_splittings,
    fq_divmod,
    fq_gcd,
    fq_mul,
    is_quadratic_residue,
    ord_mod,
)
from .ring import MismatchedRing, NotAUnit, RElem, RingSpec, gamma_valuation, is_unit
from .ringpoly import (
    LiftError,
    NonUnitConstantTerm,
    NoSuchRoot,
    RPoly,
    hensel_lift_factorization,
    lifted_factorization,
    multiplier_mod,
    nth_roots_of_unity,
    primitive_root_of_unity,
    r_divmod_monic,
    r_mul,
    reciprocal,
    substitute_scaled,
)

__all__ = [
    "BudgetExceeded",
    "Codeword",
    "ConstructedCode",
    "ConstructionResult",
    "CosetPartition",
    "CyclicCode",
    "DEFAULT_BUDGET",
    "FqPoly",
    "IsodualCertificate",
    "LiftError",
    "MismatchedRing",
    "NoSuchRoot",
    "NonUnitConstantTerm",
    "NotAUnit",
    "RElem",
    "RPoly",
    "RingSpec",
    "Splitting",
    "TooLarge",
    "WeightReport",
    "ZeroCode",
    "annihilator_count",
    "annihilator_vectors",
    "apply_multiplier",
    "apply_scaling",
    "cardinality_log",
    "certify_isodual",
    "contains",
    "cyclotomic_cosets",
    "dual",
    "duadic_lift",
    "duadic_pair",
    "enumerate_codewords",
    "enumerate_matrix",
    "enumeration_cost",
    "factor_xn_minus_1",
    "find_splittings",
    "fq_divmod",
    "fq_gcd",
    "fq_mul",
    "from_generator",
    "from_two_stage",
    "gamma_valuation",
    "generator_matrix",
    "hensel_lift_factorization",
    "inner_product",
    "is_quadratic_residue",
    "is_self_dual",
    "is_unit",
    "lifted_factorization",
    "min_hamming_weight",
    "min_weight_direct",
    "min_weight_residue",
    "multiplier_mod",
    "nth_roots_of_unity",
    "oddlike_generator_matrix",
    "ord_mod",
    "primitive_root_of_unity",
    "r_divmod_monic",
    "r_mul",
    "reciprocal",
    "remark46_code",
    "search_equivalence",
    "search_multiplier_equivalence",
    "substitute_scaled",
    "thm42_isodual",
    "thm44_isodual",
    "thm510_isodual",
    "two_stage_generator_matrix",
    "verify_result",
]
