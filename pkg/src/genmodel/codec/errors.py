"""Exceptions of the codec: code literal syntax, the validity checks of codes and the layout convention."""


class CodecError(Exception):
    """Base of all errors of the codec."""


class CodeSyntaxError(CodecError):
    """Raised when a code or set literal cannot be read."""


class WfeError(CodecError):
    """Base of the reasons a relation fails to code a set."""


class IllFounded(WfeError):
    """The relation has a cycle; `cycle` lists its nodes in edge order."""
    def __init__(self, cycle):
        super().__init__(f"cycle through node(s) {', '.join(str(node) for node in cycle)}")
        self.cycle = tuple(cycle)


class NotExtensional(WfeError):
    """Two nodes have the same predecessors."""
    def __init__(self, pair):
        super().__init__(f'nodes {pair[0]} and {pair[1]} have equal predecessor sets')
        self.pair = tuple(pair)


class NoUniqueTop(WfeError):
    """The relation has more than one maximal node."""
    def __init__(self, tops):
        super().__init__(f"maximal nodes {', '.join(str(node) for node in tops)}")
        self.tops = tuple(tops)


class Disconnected(WfeError):
    """A node does not lie below the top."""
    def __init__(self, node):
        super().__init__(f'node {node} is not below the top')
        self.node = node


class LayoutViolation(CodecError):
    """A node of a code does not collapse to the shape the layout convention fixes for it."""
    def __init__(self, node, expected):
        super().__init__(f'node {node}: expected {expected}')
        self.node = node
        self.expected = expected
