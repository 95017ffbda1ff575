from typing import Optional


class TastePathError(Exception):
    """Base exception, carries the CLI exit code"""

    exit_code: int = 1


class UsageError(TastePathError):
    """Bad invocation or arguments"""

    exit_code = 1


class ConfigError(UsageError):
    """Run configuration could not be loaded or validated"""

    pass


class DataError(TastePathError):
    """Input data violates a contract"""

    exit_code = 2


class ParseError(DataError):
    """Malformed input record"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownEntityError(DataError, LookupError):
    """Reference to a user or genre that is not indexed"""

    pass


class EmptyInputError(DataError):
    """An operation received an empty collection it cannot work on"""

    pass


class SingleClassError(DataError):
    """Training data holds a single class"""

    pass


class ShapeError(TastePathError, ValueError):
    """Incompatible matrix shapes"""

    exit_code = 2


class NumericalError(TastePathError):
    """Non-finite values or a broken numerical invariant"""

    exit_code = 3

    def __init__(self, message: str, epoch: Optional[int] = None):
        self.epoch = epoch
        if epoch is not None:
            message = f"epoch {epoch}: {message}"
        super().__init__(message)
