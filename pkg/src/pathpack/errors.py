"""Exception taxonomy shared by the whole package."""


class SolverError(Exception):
    """Base class for every error raised deliberately by this package."""


class InputError(SolverError):
    """Malformed user-supplied data (files, ids out of range, bad flags)."""


class PreconditionError(SolverError):
    """A documented operation contract was violated by the caller."""


class ParameterRangeError(SolverError):
    """Requested parameters exceed the supported numeric range."""


class InternalInvariantError(SolverError):
    """An invariant that the algorithms guarantee was observed to fail.

    Reaching this is a bug in the package, never a user error.
    """
