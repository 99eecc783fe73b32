"""Exceptions raised by the forcing construction."""


class ForcingError(Exception):
    """Base of all errors of the forcing module."""


class NotACondition(ForcingError):
    """Raised when a starting set of literals is not realized by any member of the class."""
    def __init__(self, condition):
        super().__init__(f'Not a condition of the class: {condition!r}')
        self.condition = condition


class NotDense(ForcingError):
    """Raised when no extension of a condition meets a dense set specification.

    Attributes
    ----------
    spec : :obj:`genmodel.forcing.dense.DenseSpec`
        The specification that could not be met.
    condition : :obj:`genmodel.forcing.condition.Condition`
        The condition below which the search failed.
    step : int
        Index of the construction step, or None outside of a construction.

    """
    def __init__(self, spec, condition, step=None):
        self.spec = spec
        self.condition = condition
        self.step = step
        super().__init__(str(self))

    def __str__(self):
        where = '' if self.step is None else f'step {self.step}: '
        return f"{where}no extension of the current condition meets '{self.spec.label}'"


class OracleFailure(ForcingError):
    """Raised when an oracle or a custom dense specification exhausts its search bound without a decision."""
