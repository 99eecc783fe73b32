"""Conditions of the forcing: finite, canonically ordered sets of literals."""
from dataclasses import dataclass, field

from ..logic.formula import sort_literals, well_sorted_check
from ..logic.parser import render_literal


@dataclass(frozen=True)
class Condition:
    """A finite set of literals, kept duplicate-free and in canonical order.

    Use :meth:`create` to validate and order plain literal collections.

    """
    signature: object
    literals: tuple = ()
    members: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, 'members', frozenset(self.literals))

    @classmethod
    def create(cls, sig, literals=()):
        """Check every literal against `sig` and return them as a condition."""
        for literal in literals:
            well_sorted_check(sig, literal.atom, closed=True).raise_for_violations()
        return cls(sig, sort_literals(sig, literals))

    def extend(self, literals):
        """The condition with `literals` added."""
        literals = tuple(literals)
        if self.members.issuperset(literals):
            return self
        return Condition(self.signature, sort_literals(self.signature, self.literals + literals))

    def issubset(self, other):
        """Whether every literal of this condition belongs to `other`."""
        return self.members <= getattr(other, 'members', other)

    def difference(self, other):
        """Literals of this condition missing from `other`, in canonical order."""
        return tuple(literal for literal in self.literals if literal not in other.members)

    def contradictory(self):
        """Whether the condition holds a literal together with its negation."""
        return any(literal.negate() in self.members for literal in self.literals)

    def render(self):
        """Brace-enclosed DSL form, as read by :func:`genmodel.logic.parser.parse_literals`."""
        return '{' + ', '.join(render_literal(literal) for literal in self.literals) + '}'

    def __contains__(self, literal):
        return literal in self.members

    def __iter__(self):
        return iter(self.literals)

    def __len__(self):
        return len(self.literals)
