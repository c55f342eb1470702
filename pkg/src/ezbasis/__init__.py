"""Exact constructions and verifications for the double zeta family
zeta(-c, s+c).

The package builds the integer coefficient matrix governing the
Q-linear relations among Euler-Zagier double zeta functions with
non-positive first argument, inverts its triangular halves exactly,
produces the relation family and the odd-index basis representations,
catalogs every pole with its exact residue, and verifies all of it
through independent oracles: a second inversion algorithm, a
residue-matching derivation of the basis coefficients, an exact
expansion over shifted Riemann zeta functions, and floating-point
summation with rigorous truncation bounds.  All symbolic data is
`fractions.Fraction`; nothing symbolic ever touches a float.
"""

from .coeffs import (
    BivariatePoly,
    CoeffMatrix,
    PowerSumReport,
    build_matrix_A,
    coeff_a,
    power_sum_decomposition,
    split_A1_A2,
    tornheim_decomposition,
    verify_power_sum_identity,
)
from .analytic import (
    PoleRecord,
    PoleTable,
    ZetaShiftExpansion,
    independence_witness,
    pole_table,
    residues_from_expansion,
    verify_relations_exact,
    zeta_shift_expansion,
)
from .errors import SingularMatrixError, VerificationError
from .exactnum import (
    FaulhaberPoly,
    Rational,
    bernoulli,
    faulhaber,
    gen_binomial,
    rat_arith,
    rat_from_str,
    rat_to_str,
    zeta_neg,
)
from .numeval import (
    NumericReport,
    NumericResult,
    eval_ez_double,
    eval_tornheim,
    numeric_verify,
    tornheim_inner_sum,
    zeta_reference,
)
from .relations import (
    BasisFunction,
    BasisRepresentation,
    RelationVector,
    basis_list,
    basis_representation,
    dimension,
    relation_family,
    residue_system_representation,
)
from .trilinalg import det_Dij, invert_cofactor, invert_forward, mat_mul, row_sums

__version__ = "0.1.0"

__all__ = [
    "BasisFunction",
    "BasisRepresentation",
    "BivariatePoly",
    "CoeffMatrix",
    "FaulhaberPoly",
    "NumericReport",
    "NumericResult",
    "PoleRecord",
    "PoleTable",
    "PowerSumReport",
    "Rational",
    "RelationVector",
    "SingularMatrixError",
    "VerificationError",
    "ZetaShiftExpansion",
    "basis_list",
    "basis_representation",
    "bernoulli",
    "build_matrix_A",
    "coeff_a",
    "det_Dij",
    "dimension",
    "eval_ez_double",
    "eval_tornheim",
    "faulhaber",
    "gen_binomial",
    "independence_witness",
    "invert_cofactor",
    "invert_forward",
    "mat_mul",
    "numeric_verify",
    "pole_table",
    "power_sum_decomposition",
    "rat_arith",
    "rat_from_str",
    "rat_to_str",
    "relation_family",
    "residue_system_representation",
    "residues_from_expansion",
    "row_sums",
    "split_A1_A2",
    "tornheim_decomposition",
    "tornheim_inner_sum",
    "verify_power_sum_identity",
    "verify_relations_exact",
    "zeta_neg",
    "zeta_reference",
    "zeta_shift_expansion",
]
