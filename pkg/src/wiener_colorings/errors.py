"""Exception hierarchy shared by the library and the CLI."""


class WienerError(Exception):
    """Base class for every error raised by this package."""


class DomainError(WienerError, ValueError):
    """An argument lies outside the domain of an operation."""


class InvalidSizeError(DomainError):
    pass


class ConnectivityError(DomainError):
    pass


class ParseError(DomainError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SurjectivityError(DomainError):
    pass


class OrderError(DomainError):
    """Raised when a majorization precondition does not hold."""


class BudgetError(WienerError):
    """An exhaustive computation would exceed its configured state budget."""


class UsageError(WienerError):
    pass
