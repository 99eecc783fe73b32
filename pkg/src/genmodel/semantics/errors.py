"""Exceptions raised by structures and evaluation."""


class SemanticsError(Exception):
    """Base of all errors of the semantics module."""


class StructureError(SemanticsError):
    """Raised when a structure violates its invariants, or a structure literal cannot be read."""


class UnsupportedFormula(SemanticsError):
    """Raised when evaluation meets a countably-indexed family, whose truth is established by certificates only."""
    def __init__(self, formula):
        super().__init__(f'Cannot evaluate countable family {getattr(formula, "label", formula)!r} directly.')
        self.formula = formula
