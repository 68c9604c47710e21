"""Exception hierarchy shared across the package.

Each subclass corresponds to one failure mode of the public API and, through
the command line front end, to one process exit code.
"""


class PfkitError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(PfkitError):
    """Malformed parameters: bad modulus, length, residues, or label data."""


class UnsupportedCodeError(PfkitError):
    """The code is neither even (Case A) nor half-period (Case B)."""


class CapExceededError(PfkitError):
    """An enumeration would exceed its configured size cap."""


class VerificationError(PfkitError):
    """A cross-check between two independent computations disagreed."""
