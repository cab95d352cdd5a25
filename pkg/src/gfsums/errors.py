"""Exception types raised by gfsums."""


class ZeroDenominator(ZeroDivisionError):
    """A rational or rational function was built with a zero denominator."""


class DivisionByZero(ZeroDivisionError):
    """Division by an exact zero scalar."""


class PoleAtPoint(ArithmeticError):
    """A rational function was evaluated at a root of its denominator."""


class OutOfRange(ValueError):
    pass


class SingularWeight(ArithmeticError):
    """The characteristic polynomial vanishes at the requested weight."""


class Divergent(ArithmeticError):
    """The infinite sum does not converge at the requested weight."""


class UnsupportedBasis(ValueError):
    pass
