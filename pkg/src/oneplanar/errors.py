"""Exception types raised by the library."""


class OnePlanarError(Exception):
    """Base class for all library errors."""


class MalformedRotation(OnePlanarError):
    pass


class EdgeAbsent(OnePlanarError):
    pass


class BadParameter(OnePlanarError):
    pass


class ParseError(OnePlanarError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidDrawing(OnePlanarError):
    """Raised when a drawing fails validation; carries the violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        codes = ", ".join(sorted({v.code for v in self.violations}))
        super().__init__(f"invalid drawing: {codes}")

    @property
    def code(self):
        return self.violations[0].code if self.violations else None


class NonIntegerSum(OnePlanarError):
    pass


class CrossingEdgeChosen(OnePlanarError):
    pass


class NotQuadrangulation(OnePlanarError):
    pass


class NotThreeConnected(OnePlanarError):
    pass


class DecompositionFailure(OnePlanarError):
    pass


class SearchBudgetExceeded(OnePlanarError):
    def __init__(self, budget, k=None):
        self.budget = budget
        self.k = k
        super().__init__(f"search budget of {budget} nodes exceeded" + (f" at k={k}" if k is not None else ""))


class LayoutDegenerate(OnePlanarError):
    pass
