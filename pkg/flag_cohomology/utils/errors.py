"""Exception hierarchy for flag-variety cohomology computations."""


class FlagCohomologyError(ValueError):
    """Base class for all errors raised by the package."""


class InvalidCartanType(FlagCohomologyError):
    """Unknown family letter or a rank the family does not allow."""


class NodeOutOfRange(FlagCohomologyError):
    """A Dynkin node index outside 1..rank."""


class GroupTooLarge(FlagCohomologyError):
    """Weyl group enumeration would exceed the configured cap."""


class NotAWeylElement(FlagCohomologyError):
    """A matrix that does not permute the roots."""


class RankMismatch(FlagCohomologyError):
    """Polynomial and root system disagree on the number of variables."""


class InhomogeneousInput(FlagCohomologyError):
    """A polynomial that is not homogeneous of the requested degree."""


class NotSimpleType(FlagCohomologyError):
    """The Dynkin diagram is disconnected."""


class NotDivisible(FlagCohomologyError):
    """Exact division by D failed."""


class PartitionOutOfBox(FlagCohomologyError):
    """A two-row partition that does not fit the 2 x 2n box."""


class ProportionalityFailure(FlagCohomologyError):
    """The fiber class is not +/- the Schubert pullback."""


class PresentationError(FlagCohomologyError):
    """An internal invariant of the Borel presentation was violated."""


class InvalidParameter(FlagCohomologyError):
    """A numeric parameter outside its allowed range, such as n < 1."""


class ConfigError(FlagCohomologyError):
    """A configuration file that cannot be parsed or holds an invalid value."""
