"""Defining polynomials used across the test-suite (constant term first)."""

from unram_cert.finitefield import IntPolynomial

SEXTIC = IntPolynomial.parse("x^6 - 10x^4 - 7x^3 + 15x^2 + 14x + 3")
NONIC = IntPolynomial.parse("x^9 - 2x^8 + 10x^7 - 25x^6 + 34x^5 - 40x^4 + 52x^3 - 45x^2 + 20x - 4")
DODECIC = IntPolynomial.parse(
    "x^12 + 11x^11 - 59x^10 - 647x^9 - 295x^8 + 5446x^7 + 4294x^6"
    " - 14727x^5 - 4960x^4 + 16477x^3 - 4028x^2 - 1813x + 324")
