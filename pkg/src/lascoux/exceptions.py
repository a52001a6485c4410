"""Exception classes raised across the package."""


class TableauError(ValueError):
    """Base class for malformed tableau fillings."""


class EmptyCell(TableauError):
    def __init__(self, row, col):
        self.row, self.col = row, col
        super().__init__(f"cell ({row},{col}) is empty")


class RowViolation(TableauError):
    def __init__(self, row, col):
        self.row, self.col = row, col
        super().__init__(f"row condition fails between cells ({row},{col - 1}) and ({row},{col})")


class ColumnViolation(TableauError):
    def __init__(self, row, col):
        self.row, self.col = row, col
        super().__init__(f"column condition fails between cells ({row - 1},{col}) and ({row},{col})")


class RaggedShape(TableauError):
    pass


class ShapeMismatch(ValueError):
    pass


class OracleGuard(RuntimeError):
    """The brute-force right-key oracle would expand too many tableaux."""


class InfeasibleShape(ValueError):
    pass


class SizeGuardExceeded(RuntimeError):
    pass


class IndexOutOfRange(IndexError):
    pass


class InexactDivision(ArithmeticError):
    pass


class TooFewVariables(ValueError):
    pass


class EntryExceedsVariables(ValueError):
    pass


class ParseError(ValueError):
    pass


class MismatchError(AssertionError):
    """Two independent computations of the same object disagree."""
