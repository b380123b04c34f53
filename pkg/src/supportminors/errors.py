"""Package-level exception types."""


class CapExceededError(Exception):
    """A computation was refused because a configured cap would be exceeded."""
