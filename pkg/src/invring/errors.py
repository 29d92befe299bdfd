"""Exception hierarchy shared by the engine modules."""


class EngineError(Exception):
    """Base class for all domain errors raised by invring."""


class SignatureMismatch(EngineError):
    """Two operands belong to different algebra signatures."""


class PolyParseError(EngineError):
    """Syntax or name error in a polynomial expression.

    Carries the 0-based offset into the source text where the error
    was detected.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotSemisimple(EngineError):
    """The Killing form is singular; Casimir machinery is unavailable."""


class NotSolvable(EngineError):
    """The Lie algebra is not solvable; weight decompositions need solvability."""


class NotSplitOverBaseField(EngineError):
    """A characteristic polynomial has no complete rational root set.

    `factor` is the rational-root-free remainder of the characteristic
    polynomial, rendered in the variable t.
    """

    def __init__(self, message: str, factor: str = ""):
        super().__init__(message)
        self.factor = factor


class GammaViolation(EngineError):
    """The Gamma selector fails the subsemigroup or Gamma + Gamma^c condition."""


class PhiViolation(EngineError):
    """The Phi selector fails condition (a): Gamma + Phi inside Phi."""


class SplitFailure(EngineError):
    """Casimir kernel and image fail to split a graded piece (internal bug)."""


class ProblemFileError(EngineError):
    """A problem file fails to parse or references unknown names."""
