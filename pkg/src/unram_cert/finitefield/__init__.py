"""Finite fields, polynomials over them, and integer polynomials."""

from .extfield import ExtField
from .factor import (FactorizationFp, distinct_degree_factorization, equal_degree_factorization,
                     factor, format_factorization, is_irreducible, monic_polynomials,
                     normalize_factorization_string, squarefree_decomposition)
from .fields import PrimeField
from .intpoly import (IntPolynomial, SplittingType, dedekind_index_test, factor_mod_p,
                      int_poly_discriminant, resultant, splitting_type, unramified_part)
from .poly import FpPolynomial

__all__ = [
    "ExtField", "FactorizationFp", "FpPolynomial", "IntPolynomial", "PrimeField", "SplittingType",
    "dedekind_index_test", "distinct_degree_factorization", "equal_degree_factorization", "factor",
    "factor_mod_p", "format_factorization", "int_poly_discriminant", "is_irreducible",
    "monic_polynomials", "normalize_factorization_string", "resultant", "splitting_type",
    "squarefree_decomposition", "unramified_part",
]
