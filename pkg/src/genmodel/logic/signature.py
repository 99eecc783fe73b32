"""Multi-sorted relational signatures.

A signature lists its sorts, a nonempty ordered vocabulary of constants per sort and typed relation symbols. The
declaration order is the canonical order of everything derived from it: atomic sentences, literals, conditions and
enumerated structures.

"""
import re
from dataclasses import dataclass, field

from .errors import SignatureError

IDENTIFIER = re.compile(r'[A-Za-z_][A-Za-z0-9_]*\Z')
KEYWORDS = frozenset(('And', 'Or', 'Exists', 'Forall'))


def _check_identifier(name, kind):
    if not isinstance(name, str) or not IDENTIFIER.match(name) or name in KEYWORDS:
        raise SignatureError(f"Invalid {kind} name '{name}'.")


@dataclass(frozen=True)
class Relation:
    """A relation symbol with its sort type, one sort per argument position."""
    name: str
    sorts: tuple

    @property
    def arity(self):
        """Number of arguments."""
        return len(self.sorts)


@dataclass(frozen=True)
class Signature:
    """A multi-sorted relational signature.

    Use :meth:`create` to build one from plain containers.

    Attributes
    ----------
    sorts : tuple of str
        Sort names in declaration order.
    constants : tuple of (str, tuple of str)
        Per sort, in sort order, its constant names in declaration order.
    relations : tuple of :obj:`Relation`
        Relation symbols in declaration order.

    """
    sorts: tuple
    constants: tuple
    relations: tuple
    _sort_of: dict = field(init=False, repr=False, compare=False, hash=False)
    _const_index: dict = field(init=False, repr=False, compare=False, hash=False)
    _relations: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(set(self.sorts)) != len(self.sorts):
            raise SignatureError('Sort names must be pairwise distinct.')
        for sort in self.sorts:
            _check_identifier(sort, 'sort')
        if tuple(sort for sort, _ in self.constants) != self.sorts:
            raise SignatureError('Constants must be listed for every sort, in sort order.')

        sort_of = {}
        for sort, names in self.constants:
            if not names:
                raise SignatureError(f"Sort '{sort}' has no constants.")
            for name in names:
                _check_identifier(name, 'constant')
                if name in sort_of:
                    raise SignatureError(f"Constant '{name}' is declared twice.")
                sort_of[name] = sort

        relations = {}
        for relation in self.relations:
            _check_identifier(relation.name, 'relation')
            if relation.name in relations or relation.name in sort_of:
                raise SignatureError(f"Relation '{relation.name}' clashes with another symbol.")
            if not relation.sorts:
                raise SignatureError(f"Relation '{relation.name}' has arity 0.")
            for sort in relation.sorts:
                if sort not in self.sorts:
                    raise SignatureError(f"Relation '{relation.name}' uses undeclared sort '{sort}'.")
            relations[relation.name] = relation

        object.__setattr__(self, '_sort_of', sort_of)
        object.__setattr__(self, '_const_index', {name: index for index, name in enumerate(sort_of)})
        object.__setattr__(self, '_relations', relations)

    @classmethod
    def create(cls, sorts, constants, relations=None):
        """Build a signature from plain containers.

        Parameters
        ----------
        sorts : iterable of str
            Sort names.
        constants : dict
            Maps each sort to an iterable of constant names.
        relations : dict, optional
            Maps each relation name to an iterable of sorts, its sort type.

        Returns
        -------
        :obj:`Signature`

        """
        sorts = tuple(sorts)
        missing = [sort for sort in sorts if sort not in constants]
        if missing:
            raise SignatureError(f"No constants declared for sort(s): {', '.join(missing)}")
        extra = [sort for sort in constants if sort not in sorts]
        if extra:
            raise SignatureError(f"Constants declared for undeclared sort(s): {', '.join(extra)}")
        return cls(
            sorts=sorts,
            constants=tuple((sort, tuple(constants[sort])) for sort in sorts),
            relations=tuple(Relation(name, tuple(types)) for name, types in (relations or {}).items()),
        )

    def constants_of(self, sort):
        """Constant names of `sort` in declaration order."""
        for name, names in self.constants:
            if name == sort:
                return names
        raise KeyError(sort)

    def all_constants(self):
        """All constant names in canonical order."""
        return tuple(self._sort_of)

    def sort_of(self, constant):
        """Sort of a constant, or None if it is not declared."""
        return self._sort_of.get(constant)

    def has_sort(self, sort):
        """Whether `sort` is declared."""
        return sort in self.sorts

    def relation(self, name):
        """The relation symbol called `name`, or None."""
        return self._relations.get(name)

    def sort_index(self, sort):
        """Position of `sort` in declaration order."""
        return self.sorts.index(sort)

    def constant_index(self, constant):
        """Position of `constant` in canonical order."""
        return self._const_index[constant]

    def relation_index(self, name):
        """Position of relation `name` in declaration order."""
        return self.relations.index(self._relations[name])

    def to_dict(self):
        """Plain-container form, as read by :meth:`create` and used in scenario files."""
        return {
            'sorts': list(self.sorts),
            'constants': {sort: list(names) for sort, names in self.constants},
            'relations': {relation.name: list(relation.sorts) for relation in self.relations},
        }
