# McCoy/utils/exceptions.py

from typing import Iterable, Optional


class McCoyError(Exception):
    pass


class ConstructionError(McCoyError):
    pass


class RingMismatch(McCoyError):
    pass


class ConsistencyFault(McCoyError):
    pass


class BudgetExceeded(McCoyError):
    def __init__(self, message: str, estimate: int = 0, budget: int = 0):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget


class ParseError(McCoyError):
    def __init__(self, message: str, position: int = 0, expected: Optional[Iterable[str]] = None):
        super().__init__(message)
        self.position = position
        self.expected = sorted(set(expected or ()))


class UnknownName(ParseError):
    pass
