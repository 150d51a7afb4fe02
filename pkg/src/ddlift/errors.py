"""Shared exception types."""


class ConstructionError(ValueError):
    """A construction self-check failed; the message names the violated property."""


class DocumentError(ValueError):
    """A design document violates the schema; the message carries a JSON path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
