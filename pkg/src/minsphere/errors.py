"""Exception types raised on violated preconditions."""


class PreconditionError(ValueError):
    """Input does not satisfy the operation's precondition."""


class DimensionMismatch(PreconditionError):
    pass


class NotHolomorphic(PreconditionError):
    pass


class NonOrthogonalFrames(PreconditionError):
    def __init__(self, pair, pairing):
        super().__init__(f"frames {pair[0]} and {pair[1]} are not orthogonal: <f, g> = {pairing}")
        self.pair = pair
        self.pairing = pairing


class NotUnitary(PreconditionError):
    pass


class NotSymmetric(PreconditionError):
    pass


class IsotropicSeed(PreconditionError):
    pass


class ZeroMetric(ZeroDivisionError):
    """The induced metric vanishes identically."""
