"""Apery numbers on all of Z: exact values, the derivative sequence,
Lucas-type congruences modulo p, p^2 and p^3, digit sets D(p), numeric
evaluation of the entire interpolation A(z), and the multiple-zeta-value
expansion of its Taylor coefficients."""

from .arith import (
    Residue,
    binomial,
    harmonic,
    is_prime,
    jacobsthal_holds,
    mod_inverse,
    primes_upto,
    rational_mod,
    wolstenholme_residue,
)
from .cachefile import CacheError, cache_load, cache_store
from .congruences import (
    CongruenceReport,
    Counterexample,
    DigitSet,
    digit_set,
    scan_digit_sets,
    verify_digit_set_lucas,
    verify_gessel_mod_p2,
    verify_lucas_mod_p,
    verify_mod_p3_suite,
    verify_multi_digit,
)
from .function import (
    ComplexApprox,
    TruncatedPolynomial,
    apery_eval,
    functional_equation_residual,
    taylor_coeff_truncated,
)
from .mzv import (
    MzvTerm,
    PiPower,
    REDUCED_FORMS,
    admissible_compositions,
    composition_coefficient,
    even_zeta,
    is_admissible,
    mzv_float,
    mzv_partial,
    reduced_form_residual,
    reduced_form_value,
    stuffle_depth1_residual,
    stuffle_depth2_residual,
    taylor_coeff_float,
    taylor_identity_holds,
    taylor_terms,
    zeta_all_twos,
)
from .sequence import (
    AperyCache,
    apery,
    apery_deriv,
    apery_deriv_reflected,
    apery_fast,
    apery_mod_p,
    apery_mod_p2,
    apery_mod_sweep,
    apery_via_recurrence,
    mod_p2_tables,
    mod_p_table,
    shared_cache,
)

__version__ = "0.1.0"

__all__ = [
    "AperyCache",
    "CacheError",
    "ComplexApprox",
    "CongruenceReport",
    "Counterexample",
    "DigitSet",
    "MzvTerm",
    "PiPower",
    "REDUCED_FORMS",
    "Residue",
    "TruncatedPolynomial",
    "admissible_compositions",
    "apery",
    "apery_deriv",
    "apery_deriv_reflected",
    "apery_eval",
    "apery_fast",
    "apery_mod_p",
    "apery_mod_p2",
    "apery_mod_sweep",
    "apery_via_recurrence",
    "binomial",
    "cache_load",
    "cache_store",
    "composition_coefficient",
    "digit_set",
    "even_zeta",
    "functional_equation_residual",
    "harmonic",
    "is_admissible",
    "is_prime",
    "jacobsthal_holds",
    "mod_inverse",
    "mod_p2_tables",
    "mod_p_table",
    "mzv_float",
    "mzv_partial",
    "primes_upto",
    "rational_mod",
    "reduced_form_residual",
    "reduced_form_value",
    "scan_digit_sets",
    "shared_cache",
    "stuffle_depth1_residual",
    "stuffle_depth2_residual",
    "taylor_coeff_float",
    "taylor_coeff_truncated",
    "taylor_identity_holds",
    "taylor_terms",
    "verify_digit_set_lucas",
    "verify_gessel_mod_p2",
    "verify_lucas_mod_p",
    "verify_mod_p3_suite",
    "verify_multi_digit",
    "wolstenholme_residue",
    "zeta_all_twos",
]
