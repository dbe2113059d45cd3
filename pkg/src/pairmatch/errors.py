"""Exception taxonomy shared by all pairmatch modules.

Every error raised on purpose by this package derives from PairmatchError,
split into two broad families that the CLI maps onto exit codes: input/parse
problems (exit 1) and numerical or invariant violations (exit 2).  Oracle
mismatches are reported by the CLI itself (exit 3) and have no exception
class.
"""


class PairmatchError(Exception):
    """Base class for all errors raised by pairmatch."""


class InputError(PairmatchError):
    """Bad user input: malformed files, unknown names, unusable options."""


class NumericalError(PairmatchError):
    """Violated numerical precondition or runtime invariant."""


class ParseError(InputError):
    """A file could not be parsed; carries row/column diagnostics."""

    def __init__(self, message, path=None, row=None, column=None):
        loc = []
        if path is not None:
            loc.append(str(path))
        if row is not None:
            loc.append(f"row {row}")
        if column is not None:
            loc.append(f"column {column}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.path = path
        self.row = row
        self.column = column


class UnknownScenario(InputError):
    """Requested scenario name is not a builtin."""


class SingularCovariance(NumericalError):
    """Sample covariance is numerically singular (collinear or constant
    covariates); rerun with a positive ridge to proceed."""


class DimensionMismatch(NumericalError):
    """Covariance model and unit table disagree on covariate count."""


class InvariantViolation(NumericalError):
    """A domain-type invariant does not hold (for example 2m > N)."""


class OddNodeCount(NumericalError):
    """Perfect matching requested on an odd number of nodes."""


class NonFiniteWeight(NumericalError):
    """Weight matrix contains NaN or infinity."""


class TooLarge(NumericalError):
    """Instance exceeds the brute-force oracle's enumeration limit."""


class OddPoolForRanking(NumericalError):
    """The ranking method needs an even pool; it matches all N units first."""


class InternalSinkPairing(NumericalError):
    """A sink-sink pair survived optimal selection; indicates a broken
    big-weight guard and is never expected to be reachable."""


class InvalidGenerator(InputError):
    """Covariate generator parameters outside their natural domain."""


class EmptySample(NumericalError):
    """Summary statistics requested for an empty sample."""


class AllRepsFailed(NumericalError):
    """Every replication of a scenario errored out."""


class FailureBudgetExceeded(NumericalError):
    """More than 1% of a scenario's replications failed; results would not
    be comparable so the scenario aborts."""
