"""Exception hierarchy.

Every domain error carries its class name as the error code reported by the
command-line front end, so ``type(err).__name__`` is part of the interface.
"""


class LambdaTreesError(Exception):
    """Base class for domain errors."""


class ParseError(LambdaTreesError):
    """Malformed text input.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


# tree validation
class NotATree(LambdaTreesError):
    pass


class BadValence(LambdaTreesError):
    pass


class LabelOutOfRange(LambdaTreesError):
    pass


class UnreducedWord(LambdaTreesError):
    pass


# tree sums and normal forms
class RepeatingTree(LambdaTreesError):
    pass


class ContextMismatch(LambdaTreesError):
    pass


class GroupKindUnsupported(LambdaTreesError):
    pass


# Lie algebra
class MixedDegree(LambdaTreesError):
    pass


class GeneratorClash(LambdaTreesError):
    pass


# Milnor invariants
class LowerOrderNonzero(LambdaTreesError):
    def __init__(self, component, monomial, coefficient):
        super().__init__(
            f"longitude {component}: lower order coefficient of "
            f"{''.join(f'X{k}' for k in monomial)} is {coefficient}"
        )
        self.component = component
        self.monomial = monomial
        self.coefficient = coefficient


# indeterminacy
class MissingPattern(LambdaTreesError):
    pass


class BudgetExceeded(LambdaTreesError):
    """Enumeration would exceed the configured budget.

    ``report`` holds whatever was computed before stopping; its
    ``exhaustive`` flag is False.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
