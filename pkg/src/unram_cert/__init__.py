"""unram-cert: mechanical re-checks for GRH-conditional determinations of
maximal unramified extensions of quadratic fields.

Subpackages follow the verification layers: finite-field polynomial
arithmetic, matrix groups over finite fields, closed-form group lemmas,
quadratic class groups, analytic discriminant bounds, and the certificate
checker that strings them together.
"""

__version__ = "0.1.0"
