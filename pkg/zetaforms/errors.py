from typing import List, Optional


class ZetaFormsError(Exception):
    """Base class for every error raised by zetaforms."""


class ParameterError(ZetaFormsError, ValueError):
    """
    A parameter set violates one of the constraints on (D, s, n, digits).
    The message always names the violated constraint.
    """

    def __init__(self, constraint: str, detail: Optional[str] = None):
        self.constraint = constraint
        self.detail = detail
        message = f"violated constraint: {constraint}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class DomainError(ZetaFormsError, ValueError):
    pass


class PoleError(DomainError):
    pass


class ConditioningError(ZetaFormsError, ArithmeticError):
    pass


class PrecisionError(ZetaFormsError, ArithmeticError):
    pass


class InternalConsistencyError(ZetaFormsError, AssertionError):
    """
    An exact identity that must hold did not. This always signals a bug (or a
    falsified claim) and is never swallowed.
    """


class IrreducibleCombinationError(ZetaFormsError, ValueError):
    def __init__(self, residual_terms: List[str]):
        self.residual_terms = residual_terms
        super().__init__(
            "weights are not in the divisor lattice; residual Hurwitz terms: "
            + ", ".join(residual_terms)
        )
