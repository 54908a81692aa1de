"""Exceptions shared across the package."""


class BadParameter(ValueError):
    """Group parameters outside m, n >= 2 and t >= 2."""


class MixedContexts(ValueError):
    """Elements of different groups combined in one operation."""


class PreconditionViolated(ValueError):
    pass


class VerificationFailure(AssertionError):
    """A self-check by multiplication failed; this is a bug, never a verdict."""


class InputsConjugate(ValueError):
    def __init__(self, conjugator):
        super().__init__(f"inputs are conjugate (conjugator {str(conjugator)!r})")
        self.conjugator = conjugator


class CapExhausted(RuntimeError):
    pass
