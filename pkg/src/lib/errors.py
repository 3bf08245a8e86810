"""Error hierarchy shared by every computation and mapped to CLI exit codes"""


class DrinfeldSsError(Exception):
    """Base class for all errors raised by drinfeld-ss"""

    exit_code: int = 1


class UsageError(DrinfeldSsError):
    """Invalid arguments or violated operation preconditions"""

    exit_code = 2


class ParseError(UsageError):
    """Text does not match the polynomial grammar"""


class PreconditionError(UsageError):
    """An operation was called outside of its domain"""


class BadReductionError(PreconditionError):
    """Reduction at a prime dividing the leading coefficient"""


class ResourceBoundError(DrinfeldSsError):
    """A configured degree, size or length bound was exceeded"""

    exit_code = 3


class PrecisionError(ResourceBoundError):
    """A series valuation could not be resolved within the maximal working precision"""


class InternalError(DrinfeldSsError):
    """A state only reachable through an implementation bug"""

    exit_code = 1


class HeightAnomalyError(InternalError):
    """tau-valuation of a reduced phi_p is neither deg p nor 2 deg p"""


class VerificationFailure(DrinfeldSsError):
    """At least one verification check failed"""

    exit_code = 1
