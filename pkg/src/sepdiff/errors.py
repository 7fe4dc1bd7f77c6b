"""Exception hierarchy; each family maps to one CLI exit code."""


class SepdiffError(Exception):
    exit_code = 1

    @property
    def kind(self):
        return type(self).__name__


class PreconditionError(SepdiffError):
    """An operation was called outside its hypotheses (exit code 1)."""


class NonPrimeCharacteristic(PreconditionError):
    pass


class DuplicateGeneratorName(PreconditionError):
    pass


class ReservedName(PreconditionError):
    pass


class ElementOfK(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class ZeroSeparant(PreconditionError):
    pass


class MultivariateInput(PreconditionError):
    pass


class OrderTooHigh(PreconditionError):
    pass


class IrreducibilityUnknown(PreconditionError):
    pass


class Reducible(PreconditionError):
    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class OrderNotLower(PreconditionError):
    pass


class ZeroInput(PreconditionError):
    pass


class DivisionByZeroClass(PreconditionError):
    pass


class MixedIdeals(PreconditionError):
    pass


class NotAConstantGenerator(PreconditionError):
    pass


class DerivativeVariablePresent(PreconditionError):
    pass


class ArityMismatch(PreconditionError):
    pass


class ParseError(SepdiffError):
    exit_code = 2

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)

    @property
    def kind(self):
        # parse errors that wrap a domain error keep its name
        return getattr(self, "_kind", "ParseError")


class Exhausted(SepdiffError):
    exit_code = 3


class InvariantBreach(SepdiffError):
    exit_code = 4
