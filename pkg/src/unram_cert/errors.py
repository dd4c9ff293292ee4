"""Exception hierarchy shared by all subpackages."""


class UnramCertError(Exception):
    """Base class for every error raised by this package."""


# finite fields and polynomials
class ZeroPolynomial(UnramCertError, ValueError):
    pass


class NotMaximalAtP(UnramCertError):
    """The order Z[x]/(f) is not p-maximal, so a splitting type cannot be
    read off the factorization mod p."""


# matrix groups
class CapExceeded(UnramCertError):
    def __init__(self, cap):
        super().__init__(f"group has more than {cap} elements")
        self.cap = cap


class OrderCapExceeded(UnramCertError):
    pass


class EnumerationTooLarge(UnramCertError):
    def __init__(self, dimension, q):
        super().__init__(
            f"commutant of dimension {dimension} over F_{q} is too large to "
            "enumerate and is not a field")
        self.dimension = dimension
        self.q = q


class NoSuchElement(UnramCertError):
    pass


class Inconclusive(UnramCertError):
    """The bounded module search ran out of budget without a proof either
    way."""


class NeedsClosure(UnramCertError):
    pass


class OddPermutation(UnramCertError, ValueError):
    pass


class ScanTooLarge(UnramCertError):
    pass


# group lemmas
class OutOfTable(UnramCertError, KeyError):
    pass


class NotCoprime(UnramCertError, ValueError):
    pass


# quadratic forms
class SquareInput(UnramCertError, ValueError):
    pass


class NotFundamental(UnramCertError, ValueError):
    pass


# bounds
class MissingConstant(UnramCertError):
    pass


class NoApplicableEntry(UnramCertError):
    pass


# certificates
class WildCase(UnramCertError):
    pass


class ParseError(UnramCertError):
    pass


class ValidationError(UnramCertError):
    def __init__(self, message, step_index=None):
        where = f"step {step_index}: " if step_index is not None else ""
        super().__init__(where + message)
        self.step_index = step_index
