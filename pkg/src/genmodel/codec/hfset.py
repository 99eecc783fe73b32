"""Hereditarily finite sets, identified with their Ackermann codes.

The code of a set is the sum of 2**code(x) over its elements x, so every natural number codes exactly one set and the
canonical order of sets is the order of their codes.

"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice

import pyparsing as pp

from .errors import CodeSyntaxError


@lru_cache(maxsize=None)
def _rank(code):
    if code == 0:
        return 0
    return 1 + max(_rank(element) for element in _bits(code))


def _bits(code):
    return tuple(index for index in range(code.bit_length()) if code >> index & 1)


@dataclass(frozen=True, order=True)
class HFSet:
    """A hereditarily finite set.

    Attributes
    ----------
    code : int
        Ackermann code.

    """
    code: int = 0

    def __post_init__(self):
        if self.code < 0:
            raise ValueError('Ackermann codes are non-negative.')

    @classmethod
    def of(cls, *elements):
        """The set of `elements`."""
        return cls(sum(1 << code for code in {element.code for element in elements}))

    @property
    def elements(self):
        """Elements in canonical order."""
        return tuple(HFSet(code) for code in _bits(self.code))

    def rank(self):
        """Von Neumann rank."""
        return _rank(self.code)

    def trcl(self):
        """Transitive closure, in canonical order."""
        seen, todo = set(), list(_bits(self.code))
        while todo:
            code = todo.pop()
            if code not in seen:
                seen.add(code)
                todo.extend(_bits(code))
        return tuple(HFSet(code) for code in sorted(seen))

    def trcl_singleton(self):
        """Transitive closure of the singleton of this set, in canonical order; this set comes last."""
        return self.trcl() + (self,)

    def render(self):
        """Nested brace form, elements in canonical order, e.g. ``{{},{{}}}``."""
        return '{' + ','.join(element.render() for element in self.elements) + '}'

    def __contains__(self, element):
        return bool(self.code >> element.code & 1)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return bin(self.code).count('1')


EMPTY = HFSet(0)


def kuratowski(first, second):
    """The ordered pair {{first}, {first, second}}."""
    return HFSet.of(HFSet.of(first), HFSet.of(first, second))


def unpack_pair(value):
    """The components of a Kuratowski pair, or None if `value` is not one."""
    elements = value.elements
    if len(elements) == 1:
        singleton, = elements
        if len(singleton) == 1:
            first, = singleton.elements
            return (first, first) if value == kuratowski(first, first) else None
        return None
    if len(elements) != 2:
        return None
    small = next((element for element in elements if len(element) == 1), None)
    if small is None:
        return None
    first, = small.elements
    large = next(element for element in elements if element != small)
    if len(large) != 2 or first not in large:
        return None
    second = next(element for element in large.elements if element != first)
    return first, second


def sets_of_rank_at_most(rank, cap=None):
    """Yield the sets of rank at most `rank` in canonical order, at most `cap` of them."""
    # codes below the tower 2^^rank are exactly the sets of rank at most `rank`
    limit = 1
    for _ in range(rank):
        if limit > 64:
            limit = None
            break
        limit = 1 << limit

    def codes():
        code = 0
        while limit is None or code < limit:
            yield code
            code += 1

    return (HFSet(code) for code in islice(codes(), cap))


def _set_grammar():
    hfset = pp.Forward()
    hfset <<= pp.Group(pp.Suppress('{') + pp.Optional(hfset + pp.ZeroOrMore(pp.Suppress(',') + hfset))
                       + pp.Suppress('}'))
    ackermann = pp.Suppress(pp.Keyword('ack') + ':') + pp.Word(pp.nums)
    return hfset, ackermann


SET_LITERAL, ACKERMANN_LITERAL = _set_grammar()


def _build(group):
    return HFSet.of(*(_build(item) for item in group))


def parse_hfset(text):
    """Read a set from nested braces or from an Ackermann literal ``ack:n``.

    Raises
    ------
    :obj:`genmodel.codec.errors.CodeSyntaxError`

    """
    try:
        if text.strip().startswith('ack'):
            return HFSet(int(ACKERMANN_LITERAL.parse_string(text, parse_all=True)[0]))
        return _build(SET_LITERAL.parse_string(text, parse_all=True)[0])
    except pp.ParseBaseException as err:
        raise CodeSyntaxError(f'Cannot read set literal at position {err.loc}: {err.msg}') from err
