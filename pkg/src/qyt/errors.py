"""Exception hierarchy shared by every module of the package."""


class QYTError(Exception):
    """Base class for all errors raised by this package."""


class PartitionParseError(QYTError, ValueError):
    """Shape text could not be read as a list of integers."""


class PartitionValidationError(QYTError, ValueError):
    """Parts are not a weakly decreasing sequence of positive integers."""


class CellOutOfShapeError(QYTError, ValueError):
    pass


class TableauShapeError(QYTError, ValueError):
    """Row lengths of a filling do not form a partition."""


class NotStandardError(QYTError, ValueError):
    pass


class NotSemistandardError(QYTError, ValueError):
    pass


class NotQuasiYamanouchiError(QYTError, ValueError):
    pass


class EmptyTableauError(QYTError, ValueError):
    pass


class RangeError(QYTError, ValueError):
    """A maximum entry lies outside the achievable range for the shape."""


class InvalidFrameError(QYTError, ValueError):
    pass


class WrongDurfeeError(QYTError, ValueError):
    pass


class MethodInapplicableError(QYTError):
    """A closed form was requested for a shape it does not cover."""


class DivisibilityError(QYTError, ArithmeticError):
    """An exact division in a product formula left a remainder.

    This never happens for correct inputs; seeing it means a bug.
    """


class BudgetExceededError(QYTError, RuntimeError):
    """An exhaustive search would visit more states than allowed."""
