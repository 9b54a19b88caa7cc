"""Exception hierarchy shared by every module."""


class FirefighterError(Exception):
    """Base class for errors raised by this package."""


class InputError(FirefighterError, ValueError):
    """Arguments violate an operation's preconditions."""


class NotUnicyclicError(InputError):
    pass


class InvalidStrategyError(FirefighterError):
    """A strategy tried an illegal protection.

    ``round_index`` is the 1-based round in which the offending protection
    was attempted.
    """

    def __init__(self, message: str, round_index: int):
        super().__init__(f"round {round_index}: {message}")
        self.round_index = round_index


class BudgetExceededError(FirefighterError):
    """An exhaustive computation would exceed its configured size guard."""


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
