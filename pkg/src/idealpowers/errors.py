"""Exception types shared across the package."""


class RingMismatchError(ValueError):
    """Operands live in different ambient rings."""


class MonomialParseError(ValueError):
    """Malformed monomial or ideal text."""


class LimitExceededError(RuntimeError):
    """A documented size or time limit was hit; the operation refuses to run.

    `code` is a short machine-readable reason for CLI consumers.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
