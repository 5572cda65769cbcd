"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Graph text input is malformed."""


class SizeLimitError(ValueError):
    """An enumeration guardrail would be exceeded."""


class BudgetExceededError(ValueError):
    """A brute-force count would exceed the configured node budget."""


class InternalCheckError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""


class SingularSystemError(InternalCheckError):
    """A linear system that must be invertible turned out singular."""


class OracleMismatchError(InternalCheckError):
    """Oracle answers are inconsistent with the declared coefficients."""
