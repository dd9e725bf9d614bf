from typing import Optional


class MachineNameError(ValueError):
    """Raised when a machine-name tuple cannot be decoded."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at integer #{position})"
        super().__init__(message)


class ActionCodeError(ValueError):
    """Raised for an action code outside [0, 6n)."""
    pass


class RuleListError(ValueError):
    """Raised when a rule listing such as '(0, 0)->(1, 1, 2)' cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RecombinationError(ValueError):
    """Raised for invalid cut points or incompatible source machines."""
    pass


class LineageError(ValueError):
    """Raised for malformed lineage text or unresolvable lineage leaves."""
    pass


class PoolLoadError(Exception):
    """Raised when a machine pool file cannot be read or parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownMachineError(KeyError):
    """Raised when a machine identifier is not in the registry."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown machine"


class OutcomeNotHaltedError(Exception):
    """Raised when an operation needs a halted run but got a step-limit outcome."""
    pass


class SearchOutputError(Exception):
    """Raised for errors while writing search records."""
    pass
