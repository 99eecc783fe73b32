"""Codes of hereditarily finite sets as well-founded extensional relations, and their Mostowski collapse.

An edge (k, j) of a code means that node k collapses to an element of the collapse of node j. Bit strings are read
through the pairing function: bit n is set iff (k, j) = unpair(n) is an edge.

"""
import logging
from dataclasses import dataclass
from itertools import combinations
from math import isqrt

import numpy as np
import pyparsing as pp

from .errors import (
    CodeSyntaxError, WfeError, IllFounded, NotExtensional, NoUniqueTop, Disconnected, LayoutViolation,
)
from .hfset import HFSet, kuratowski

LOGGER = logging.getLogger(__name__)

PAIRING = 'cantor'


def pair(k, j):
    """Cantor pairing, (k + j)(k + j + 1)/2 + j; pair(1, 0) = 1 and pair(0, 1) = 2."""
    if k < 0 or j < 0:
        raise ValueError('Pairing is defined on non-negative integers.')
    return (k + j) * (k + j + 1) // 2 + j


def unpair(n):
    """Inverse of :func:`pair`."""
    if n < 0:
        raise ValueError('Pairing is defined on non-negative integers.')
    diagonal = (isqrt(8 * n + 1) - 1) // 2
    j = n - diagonal * (diagonal + 1) // 2
    return diagonal - j, j


@dataclass(frozen=True)
class WfeCode:
    """A finite binary relation on the nodes 0..size-1.

    Attributes
    ----------
    size : int
        Number of nodes, at least 1.
    edges : frozenset of (int, int)

    """
    size: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'edges', frozenset((int(k), int(j)) for k, j in self.edges))
        if self.size < 1:
            raise CodeSyntaxError('A code has at least one node.')
        for edge in self.edges:
            if not all(0 <= node < self.size for node in edge):
                raise CodeSyntaxError(f'Edge {edge} leaves the nodes 0..{self.size - 1}.')

    @classmethod
    def from_edges(cls, edges, size=None):
        """Code of `edges`, on `size` nodes or as many as the edges mention, at least one."""
        edges = frozenset(tuple(edge) for edge in edges)
        implied = 1 + max((node for edge in edges for node in edge), default=0)
        return cls(implied if size is None else size, edges)

    @classmethod
    def from_bits(cls, bits):
        """Code of a 0/1 word read through :func:`unpair`."""
        if set(bits) - {'0', '1'}:
            raise CodeSyntaxError('Bit strings consist of 0 and 1 only.')
        return cls.from_edges(unpair(index) for index, bit in enumerate(bits) if bit == '1')

    def to_bits(self):
        """Shortest 0/1 word whose code has these edges."""
        positions = {pair(k, j) for k, j in self.edges}
        return ''.join('1' if index in positions else '0' for index in range(1 + max(positions, default=0)))

    def adjacency(self):
        """Boolean matrix with entry [k, j] set iff (k, j) is an edge."""
        matrix = np.zeros((self.size, self.size), dtype=bool)
        for k, j in self.edges:
            matrix[k, j] = True
        return matrix

    def predecessors(self, node):
        """Nodes with an edge into `node`, ascending."""
        return tuple(int(k) for k in np.flatnonzero(self.adjacency()[:, node]))

    def render(self):
        """Edge set literal; the node count is spelled out when the edges do not imply it."""
        edges = ','.join(f'({k},{j})' for k, j in sorted(self.edges))
        implied = 1 + max((node for edge in self.edges for node in edge), default=0)
        prefix = 'wfe' if implied == self.size else f'wfe[{self.size}]'
        return f'{prefix}:{{{edges}}}'


def _find_cycle(matrix):
    size = len(matrix)
    state = [0] * size
    for root in range(size):
        if state[root]:
            continue
        path, stack = [], [(root, iter(np.flatnonzero(matrix[root])))]
        state[root] = 1
        path.append(root)
        while stack:
            node, successors = stack[-1]
            successor = next(successors, None)
            if successor is None:
                state[node] = 2
                stack.pop()
                path.pop()
            elif state[successor] == 1:
                return tuple(path[path.index(successor):])
            elif state[successor] == 0:
                state[successor] = 1
                path.append(int(successor))
                stack.append((int(successor), iter(np.flatnonzero(matrix[successor]))))
    return None


def _topological(matrix):
    """Nodes ordered so that every node follows its predecessors."""
    pending = matrix.sum(axis=0)
    ready = [int(node) for node in np.flatnonzero(pending == 0)]
    order = []
    while ready:
        node = ready.pop(0)
        order.append(node)
        for successor in np.flatnonzero(matrix[node]):
            pending[successor] -= 1
            if pending[successor] == 0:
                ready.append(int(successor))
    return order


def check_wfe(code):
    """Check that `code` is well-founded, extensional and has a unique maximal node with every node below it.

    Returns
    -------
    :obj:`genmodel.codec.errors.WfeError` or None
        The first failure, checked in that order, or None if `code` is valid.

    """
    matrix = code.adjacency()
    cycle = _find_cycle(matrix)
    if cycle is not None:
        return IllFounded(cycle)
    for first, second in combinations(range(code.size), 2):
        if np.array_equal(matrix[:, first], matrix[:, second]):
            return NotExtensional((first, second))
    tops = [int(node) for node in np.flatnonzero(~matrix.any(axis=1))]
    if len(tops) != 1:
        return NoUniqueTop(tops)
    below, todo = {tops[0]}, [tops[0]]
    while todo:
        for node in np.flatnonzero(matrix[:, todo.pop()]):
            if int(node) not in below:
                below.add(int(node))
                todo.append(int(node))
    for node in range(code.size):
        if node not in below:
            return Disconnected(node)
    return None


def top_node(code):
    """The maximal node of a valid code."""
    tops = np.flatnonzero(~code.adjacency().any(axis=1))
    return int(tops[0])


@dataclass(frozen=True)
class CollapseResult:
    """The collapse of every node of a code.

    Attributes
    ----------
    images : tuple of :obj:`genmodel.codec.hfset.HFSet`
        Per node, its collapse.
    top : int
        The maximal node.

    """
    images: tuple
    top: int

    @property
    def top_set(self):
        """Collapse of the maximal node."""
        return self.images[self.top]

    def __getitem__(self, node):
        return self.images[node]


def collapse_images(code):
    """Collapse every node of a well-founded code by recursion along its edges."""
    matrix = code.adjacency()
    images = [None] * code.size
    for node in _topological(matrix):
        images[node] = HFSet.of(*(images[k] for k in np.flatnonzero(matrix[:, node])))
    return tuple(images)


def mostowski_collapse(code):
    """Collapse a valid code.

    Raises
    ------
    :obj:`genmodel.codec.errors.WfeError`
        If `code` is not valid.

    """
    error = check_wfe(code)
    if error is not None:
        raise error
    return CollapseResult(collapse_images(code), top_node(code))


@dataclass(frozen=True)
class DecodeResult:
    """Value of a code with the check failure that made it fall back to the empty set, if any."""
    value: HFSet
    error: WfeError = None

    @property
    def valid(self):
        """Whether the code passed the checks."""
        return self.error is None

    @property
    def flag(self):
        """'valid', or the name of the failed check."""
        return 'valid' if self.error is None else type(self.error).__name__


def cod_decode(code):
    """The set coded by `code`, or the empty set flagged with the check failure."""
    error = check_wfe(code)
    if error is not None:
        LOGGER.debug('Code %s invalid: %s', code.render(), error)
        return DecodeResult(HFSet(), error)
    return DecodeResult(mostowski_collapse(code).top_set)


def cod_encode(value):
    """Canonical code of `value`: the transitive closure of its singleton in canonical order, with `value` on top."""
    nodes = value.trcl_singleton()
    index = {node: position for position, node in enumerate(nodes)}
    edges = {(index[element], index[node]) for node in nodes for element in node}
    return WfeCode(len(nodes), frozenset(edges))


def code_height(code):
    """Length of the longest chain of edges ending in the maximal node of a valid code."""
    matrix = code.adjacency()
    height = [0] * code.size
    for node in _topological(matrix):
        height[node] = max((height[k] + 1 for k in np.flatnonzero(matrix[:, node])), default=0)
    return height[top_node(code)]


def codes_isomorphic(first, second):
    """Whether some renumbering of the nodes of `first` yields `second`."""
    if first.size != second.size or len(first.edges) != len(second.edges):
        return False
    left, right = first.adjacency(), second.adjacency()

    def degrees(matrix):
        return list(zip(matrix.sum(axis=0).tolist(), matrix.sum(axis=1).tolist()))

    left_degrees, right_degrees = degrees(left), degrees(right)
    mapping, used = [], set()

    def extend(node):
        if node == first.size:
            return True
        for image in range(second.size):
            if image in used or left_degrees[node] != right_degrees[image]:
                continue
            consistent = left[node, node] == right[image, image] and all(
                left[node, prior] == right[image, mapping[prior]] and left[prior, node] == right[mapping[prior], image]
                for prior in range(node)
            )
            if consistent:
                mapping.append(image)
                used.add(image)
                if extend(node + 1):
                    return True
                mapping.pop()
                used.discard(image)
        return False

    return extend(0)


@dataclass(frozen=True)
class LayoutReport:
    """Outcome of :func:`pmax_layout_check`; `ok` iff there are no violations."""
    violations: tuple = ()

    @property
    def ok(self):
        """Whether the code follows the layout."""
        return not self.violations

    def render(self):
        """One line per violation, or a single OK line."""
        if self.ok:
            return 'layout: OK'
        return '\n'.join(f'layout: FAIL {violation}' for violation in self.violations)


def pmax_layout_check(code, relaxed=False):
    """Check the positional layout of a code of the pair (N, a): node 0 collapses to N and node 5 to a, nodes 1 and 2
    to {N} and {N, a}, node 3 to the Kuratowski pair of N and a and node 4, the top, to its singleton.

    Nodes past 5 are not constrained.

    Parameters
    ----------
    code : :obj:`WfeCode`
    relaxed : bool
        Accept well-founded codes failing extensionality or the unique top, collapsing them node by node.

    Returns
    -------
    :obj:`LayoutReport`

    """
    if code.size < 6:
        return LayoutReport((LayoutViolation(code.size, 'at least 6 nodes'),))
    error = check_wfe(code)
    if error is not None and (not relaxed or isinstance(error, IllFounded)):
        return LayoutReport((LayoutViolation(None, f'a valid code, not {type(error).__name__}: {error}'),))
    pi = collapse_images(code)
    first, second = pi[0], pi[5]
    expected = (
        (1, HFSet.of(first), '{pi(0)}'),
        (2, HFSet.of(first, second), '{pi(0), pi(5)}'),
        (3, kuratowski(first, second), '<pi(0), pi(5)>'),
        (4, HFSet.of(kuratowski(first, second)), '{pi(3)}'),
    )
    violations = [LayoutViolation(node, shape) for node, value, shape in expected if pi[node] != value]
    tops = [int(node) for node in np.flatnonzero(~code.adjacency().any(axis=1))]
    if tops != [4]:
        violations.append(LayoutViolation(4, 'the only maximal node'))
    return LayoutReport(tuple(violations))


def _code_grammar():
    number = pp.Word(pp.nums).set_parse_action(lambda tokens: int(tokens[0]))
    edge = pp.Group(pp.Suppress('(') + number + pp.Suppress(',') + number + pp.Suppress(')'))
    edges = pp.Group(pp.Suppress('{') + pp.Optional(edge + pp.ZeroOrMore(pp.Suppress(',') + edge)) + pp.Suppress('}'))
    size = pp.Optional(pp.Suppress('[') + number + pp.Suppress(']'), default=-1)
    wfe = pp.Suppress(pp.Keyword('wfe')) + size + pp.Suppress(':') + edges
    bits = pp.Suppress(pp.Keyword('bits') + ':') + pp.Optional(pp.Regex('[01]+'), default='')
    return wfe, bits


EDGE_LITERAL, BITS_LITERAL = _code_grammar()


def parse_code(text):
    """Read ``wfe:{(k,j),...}``, ``wfe[n]:{...}`` or ``bits:0110...``.

    Raises
    ------
    :obj:`genmodel.codec.errors.CodeSyntaxError`

    """
    text = text.strip()
    try:
        if text.startswith('bits'):
            return WfeCode.from_bits(BITS_LITERAL.parse_string(text, parse_all=True)[0])
        size, edges = EDGE_LITERAL.parse_string(text, parse_all=True)
    except pp.ParseBaseException as err:
        raise CodeSyntaxError(f'Cannot read code literal at position {err.loc}: {err.msg}') from err
    return WfeCode.from_edges((tuple(edge) for edge in edges), None if size < 0 else size)
