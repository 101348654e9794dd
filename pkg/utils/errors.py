"""Custom error classes for the projective rank toolkit."""


class ProjRankError(Exception):
    """Base exception for toolkit errors."""
    pass


class ParameterError(ProjRankError):
    """Invalid input: unsupported type/rank, index out of range, size mismatch."""
    pass


class UnsupportedOperationError(ParameterError):
    """Operation not defined for the given root system type."""
    pass


class InternalConsistencyError(ProjRankError):
    """An exact quantity came out inconsistent (signals a convention bug)."""
    pass


class DegenerateInputError(ProjRankError):
    """Rank-deficient parametrized subspace or degenerate linear configuration."""
    pass


class SearchExhaustedError(ProjRankError):
    """A finite witness search found nothing."""
    pass


class CatalogConsistencyError(ProjRankError):
    """The classification tables disagree with each other."""
    pass


class WorkflowError(ProjRankError):
    """Error in verification workflow execution."""
    pass
