"""Exceptions raised while building and verifying term models."""


class TermModelError(Exception):
    """Base of all errors of the term model module."""


class NotMaximal(TermModelError):
    """Raised when a set of literals leaves an atomic sentence undecided."""
    def __init__(self, atom):
        super().__init__(f'Atomic sentence left undecided: {atom!r}')
        self.atom = atom


class IllFormed(TermModelError):
    """Raised when the equality literals of a set violate the laws of an equivalence, or congruence fails.

    Attributes
    ----------
    violations : tuple
        The :obj:`genmodel.termmodel.model.Defect` entries found.

    """
    def __init__(self, violations):
        first = violations[0] if violations else None
        super().__init__(f'{len(violations)} well-definedness violation(s), first: {first}')
        self.violations = tuple(violations)


class MissingConjunct(TermModelError):
    """Raised when a conjunct is neither met nor refuted by a set of literals."""
    def __init__(self, index):
        super().__init__(f'Conjunct {index} is neither met nor refuted.')
        self.index = index
