"""Exception hierarchy shared by all modules."""


class DetSchemeError(Exception):
    """Base class for every error raised by this package."""


class InputError(DetSchemeError, ValueError):
    """Malformed or invalid input (parse or validation failure)."""


class BadShape(InputError):
    pass


class NotHomogeneous(InputError):
    """The matrix is not the degree matrix of any homogeneous matrix.

    ``witness`` holds the first violating quadruple ``(i, k, j, r)`` in
    1-based indices, meaning ``u[i][j] + u[k][r] != u[i][r] + u[k][j]``.
    """

    def __init__(self, witness):
        self.witness = witness
        i, k, j, r = witness
        super().__init__(f"NotHomogeneous at ({i},{j}),({k},{r})")


class NotDivisible(DetSchemeError, ArithmeticError):
    pass


class NonIntegerResult(DetSchemeError, ArithmeticError):
    pass


class DegenerateMatrix(DetSchemeError, ValueError):
    """The formulas cannot be evaluated formally (e.g. a negative trace)."""


class PreconditionError(DetSchemeError, ValueError):
    """A theorem hypothesis or operation precondition is not met."""


class NotCanonical(PreconditionError):
    pass


class NotAdmissible(PreconditionError):
    pass


class MTooSmall(PreconditionError):
    def __init__(self, m, bound, what="m"):
        self.m = m
        self.bound = bound
        super().__init__(f"MTooSmall: {what}={m} is below the bound {bound}")


class DimensionTooSmall(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError):
    pass


class InconsistentFormulas(DetSchemeError, AssertionError):
    """Two independent routes to the same invariant disagree (a bug)."""
