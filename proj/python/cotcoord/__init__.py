"""Exact character coordinates of cotangent values in cyclotomic fields.

Rationals come back as ``fractions.Fraction``; field elements are ``CycElem``
objects in Q(zeta_N) with exact arithmetic.
"""

from ._core import (
    Character,
    CycElem,
    __version__,
    all_coordinates,
    bernoulli_number,
    character,
    characters,
    cli,
    coeff_c,
    coeff_d,
    coord_cotangent_closed,
    coord_definitional,
    coord_one,
    coord_power_closed,
    coord_power_eq42,
    cotangent_number,
    cyclotomic_polynomial,
    direct_sum_float,
    gauss_sum,
    generalized_bernoulli,
    icot_power,
    icot_value,
    reconstruct,
    run_suite,
    stirling_first_unsigned,
    suite_names,
    verify_proposition_1,
    verify_stirling_identity,
)

__all__ = [
    "Character",
    "CycElem",
    "__version__",
    "all_coordinates",
    "bernoulli_number",
    "character",
    "characters",
    "cli",
    "coeff_c",
    "coeff_d",
    "coord_cotangent_closed",
    "coord_definitional",
    "coord_one",
    "coord_power_closed",
    "coord_power_eq42",
    "cotangent_number",
    "cyclotomic_polynomial",
    "direct_sum_float",
    "gauss_sum",
    "generalized_bernoulli",
    "icot_power",
    "icot_value",
    "reconstruct",
    "run_suite",
    "stirling_first_unsigned",
    "suite_names",
    "verify_proposition_1",
    "verify_stirling_identity",
]
