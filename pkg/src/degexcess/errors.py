"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Matrix or vector shapes do not fit the requested operation."""


class SingularMatrixError(ValueError):
    """A linear system has no unique solution."""


class InvalidIdealError(ValueError):
    """Input does not describe a non-zero proper monomial ideal."""


class ParameterError(ValueError):
    """Family or step-function parameters violate their constraints."""


class InfeasibleError(ValueError):
    """A point does not lie in the requested upper convex hull."""


class BudgetExceededError(RuntimeError):
    """A brute-force expansion would exceed the combination budget."""

    def __init__(self, n, predicted, budget):
        self.n = n
        self.predicted = predicted
        self.budget = budget
        super().__init__(
            f"expansion at n={n} needs {predicted} multiset combinations "
            f"(budget {budget})"
        )


class CapExceededError(RuntimeError):
    """Reduction-number search ran past its cap without finding equality."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"no reduction equality found for n <= {cap}; raise the cap")


class IdealParseError(ValueError):
    """Malformed ideal JSON; the message names the offending location."""
