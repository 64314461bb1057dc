"""van der Put series toolkit for functions on p-adic integers.

A function Z_p -> Z_p truncated to K base-p digits is a table of p^K values;
this package represents such tables in the van der Put basis, decides whether
they are 1-Lipschitz and whether they preserve the Haar measure (certified by
a brute-force permutation oracle), and constructs guaranteed
measure-preserving functions from substitution data.
"""

from vanderput._core import (
    DEFAULT_TABLE_LIMIT,
    AdditiveParts,
    BranchMap,
    CoeffWitness,
    CollisionWitness,
    Error,
    FunctionTable,
    LevelWitness,
    NormalizeResult,
    NormalizedCoeffs,
    PadicInt,
    PairWitness,
    SubstitutionFamily,
    VdpSeries,
    Verdict,
    __version__,
    ball_level,
    branch_digit_map,
    build_additive_mp,
    build_affine_mp,
    build_power_substitution_mp,
    build_xi,
    check_compatible,
    check_measure_preserving,
    check_measure_preserving_local,
    check_mp_p2,
    chi,
    coeff_scale,
    coefficients,
    decompose_additive,
    evaluate,
    normalize,
    oracle_bijective_mod,
    oracle_measure_preserving,
    parse_function_file,
    pseudo_constant_table,
    random_compatible,
    random_substitution_family,
    serialize_coeffs,
    serialize_values,
    to_table,
)

__all__ = [
    "DEFAULT_TABLE_LIMIT",
    "AdditiveParts",
    "BranchMap",
    "CoeffWitness",
    "CollisionWitness",
    "Error",
    "FunctionTable",
    "LevelWitness",
    "NormalizeResult",
    "NormalizedCoeffs",
    "PadicInt",
    "PairWitness",
    "SubstitutionFamily",
    "VdpSeries",
    "Verdict",
    "__version__",
    "ball_level",
    "branch_digit_map",
    "build_additive_mp",
    "build_affine_mp",
    "build_power_substitution_mp",
    "build_xi",
    "check_compatible",
    "check_measure_preserving",
    "check_measure_preserving_local",
    "check_mp_p2",
    "chi",
    "coeff_scale",
    "coefficients",
    "decompose_additive",
    "evaluate",
    "normalize",
    "oracle_bijective_mod",
    "oracle_measure_preserving",
    "parse_function_file",
    "pseudo_constant_table",
    "random_compatible",
    "random_substitution_family",
    "serialize_coeffs",
    "serialize_values",
    "to_table",
]
