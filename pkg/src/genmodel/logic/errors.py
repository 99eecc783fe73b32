"""Exceptions raised while building signatures, parsing and checking formulae."""


class LogicError(Exception):
    """Base of all errors of the logic core."""


class SignatureError(LogicError):
    """Raised when a signature violates its invariants."""


class FormulaSyntaxError(LogicError):
    """Raised when a DSL string does not conform to the formula grammar.

    Attributes
    ----------
    position : int
        Offset into the input at which parsing failed.

    """
    def __init__(self, message, position=0):
        super().__init__(f'{message} (at position {position})')
        self.position = position


class UnknownSymbol(LogicError):
    """Raised when a formula mentions an undeclared sort, constant, relation or an unbound variable."""
    def __init__(self, name):
        super().__init__(f"Unknown symbol '{name}'.")
        self.name = name


class SortError(LogicError):
    """Raised when a formula node does not respect the sorts of the signature.

    Attributes
    ----------
    node : object
        The offending formula node.

    """
    def __init__(self, node, reason='sort mismatch'):
        super().__init__(f'{reason}: {node!r}')
        self.node = node
        self.reason = reason


class NotAndOr(LogicError):
    """Raised when a sentence of ⋀⋁ shape (or a literal) is required, but another shape was supplied."""
    def __init__(self, sentence):
        super().__init__(f'Not of And-Or shape: {sentence!r}')
        self.sentence = sentence


class UnboundedFamily(LogicError, ValueError):
    """Raised when conjuncts of a countable family are drawn without a limit on how many."""
    def __init__(self, label):
        super().__init__(f"Countable family '{label}' needs a limit on the number of conjuncts to draw.")
        self.label = label
