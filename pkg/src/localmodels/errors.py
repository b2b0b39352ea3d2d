"""Exception hierarchy.

Every error raised for bad mathematical input derives from `DomainError`;
the CLI maps those to exit status 1.  `InternalInvariantError` subclasses
flag a violated theorem, which means a bug in this package, not bad input.
"""


class DomainError(Exception):
    """Base class for errors caused by invalid mathematical input."""


class InvalidSpec(DomainError):
    pass


class NonIntegralLattice(DomainError):
    pass


class DatumMismatch(DomainError):
    pass


class NotDominant(DomainError):
    pass


class NotSpherical(DomainError):
    pass


class NotNonnegative(DomainError):
    pass


class NotAdmissible(DomainError):
    pass


class NotAStratum(DomainError):
    pass


class NotNested(DomainError):
    pass


class PreconditionViolated(DomainError):
    pass


class NotRegular(DomainError):
    pass


class CentralMu(DomainError):
    pass


class InternalInvariantError(AssertionError):
    """A certified property failed; signals an implementation bug."""


class NotUnique(InternalInvariantError):
    pass


class RouteDisagreement(InternalInvariantError):
    pass
