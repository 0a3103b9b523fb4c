"""Exception types shared across the package."""


class MeadowError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MeadowError):
    """Malformed concrete syntax. Carries the character offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FormatError(MeadowError):
    """Malformed structure file. Carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class UnboundVariable(MeadowError):
    def __init__(self, name: str):
        super().__init__(f"unbound variable: {name}")
        self.name = name


class MissingInverseTable(MeadowError):
    """The term mentions ^-1 but the structure carries no inverse table."""


class NoFiniteCharacteristic(MeadowError):
    """Repeated sums of 1 cycle without reaching 0; the tables are corrupt."""


class SizeOverflow(MeadowError):
    """A requested carrier would exceed the configured size bound."""


class SearchBoundExceeded(MeadowError):
    """A homomorphism search would enumerate too many candidate maps."""


class NotAMeadow(MeadowError):
    """An operation requiring the restricted inverse law got a structure violating it."""


class NotPrime(MeadowError):
    def __init__(self, n: int):
        super().__init__(f"{n} is not prime")
        self.n = n


class NotRegular(MeadowError):
    """The ring has an element without a pseudoinverse."""

    def __init__(self, witness: int):
        super().__init__(f"not regular: witness {witness}")
        self.witness = witness


class UniquenessViolated(MeadowError):
    """Two distinct double pseudoinverses exist; impossible for commutative rings."""


class DecompositionNotFound(MeadowError):
    """The field search was exhausted without covering every nonzero element."""


class UnsupportedPremise(MeadowError):
    """The conditional contains a disequation, which the equational encoding cannot express."""
