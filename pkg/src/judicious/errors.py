"""Exception hierarchy shared by every module."""


class InputError(ValueError):
    """Malformed or out-of-range input supplied by the caller."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """A documented precondition of a construction does not hold."""


class BudgetExceeded(InputError):
    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"exhaustive search needs {required} assignments, budget is {budget}"
        )


class InternalLogicError(RuntimeError):
    """A proof-backed assertion failed; this always indicates a bug.

    ``dump`` holds a reproducible snapshot: the instance in text format
    followed by the partition as one line of class indices.
    """

    def __init__(self, message, dump=""):
        self.dump = dump
        super().__init__(message)
