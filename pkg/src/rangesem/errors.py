"""Exception types shared across the package."""

DEFAULT_CAP = 20


class RangeSemError(Exception):
    """Base class for all errors raised by rangesem."""


class ParseError(RangeSemError, ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class CapExceededError(RangeSemError):
    """An exhaustive operation was asked to sweep more than ``cap`` atoms/arguments."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(
            f"exhaustive enumeration over {size} elements exceeds the cap of {cap}"
        )


def check_cap(size: int, cap: int | None) -> None:
    if cap is not None and size > cap:
        raise CapExceededError(size, cap)
