"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed input: unknown labels, invalid parameters, bad files."""


class BudgetExceeded(RuntimeError):
    """A search ran out of its node budget before reaching an exact answer."""

    def __init__(self, message, budget=None):
        super().__init__(message)
        self.budget = budget


class CapExceeded(RuntimeError):
    """An exact routine refused an instance larger than its size cap."""


class NotLocallyInjective(ValueError):
    """A vertex function takes equal values on some edge."""

    def __init__(self, u, v):
        super().__init__(f"function is not locally injective on edge ({u}, {v})")
        self.edge = (u, v)
