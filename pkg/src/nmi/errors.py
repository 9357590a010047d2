"""Exception types shared by the engines and the command line."""

import time


class NMIError(Exception):
    """Base class for toolkit errors."""

    exit_code = 1


class ParseError(NMIError):
    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class BudgetExceeded(NMIError):
    """A combinatorial or wall-clock budget ran out before a verified answer."""

    exit_code = 3


class UnsupportedInput(NMIError):
    exit_code = 4


class Budget:
    """Resource limits threaded through the long-running engines.

    ``max_points`` caps lattice points enumerated by a single computation,
    ``max_seconds`` is a wall-clock deadline measured from construction.
    """

    def __init__(self, max_points=None, max_seconds=None):
        self.max_points = max_points
        self.max_seconds = max_seconds
        self._start = time.monotonic()

    def check_time(self, what="computation"):
        if self.max_seconds is not None and time.monotonic() - self._start > self.max_seconds:
            raise BudgetExceeded(f"{what}: wall-clock budget of {self.max_seconds}s exceeded")

    def check_points(self, count, what="enumeration"):
        if self.max_points is not None and count > self.max_points:
            raise BudgetExceeded(
                f"{what}: {count} lattice points exceed the budget of {self.max_points}"
            )

    def elapsed(self):
        return time.monotonic() - self._start


UNLIMITED = Budget(max_points=None, max_seconds=None)


def as_budget(budget):
    if budget is None:
        return Budget(max_points=None, max_seconds=None)
    return budget
