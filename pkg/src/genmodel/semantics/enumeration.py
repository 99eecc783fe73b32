"""Classes of finite structures and their exhaustive, canonical enumeration.

Structures are enumerated up to the quotient induced by the constants: each element is named by the least constant
denoting it, so every member of a class is produced exactly once.

"""
import logging
from dataclasses import dataclass
from itertools import product

from ..logic.formula import well_sorted_check
from .structure import MultiStructure, evaluate

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassSpec:
    """A finite class of structures.

    Attributes
    ----------
    signature : :obj:`genmodel.logic.signature.Signature`
    bounds : tuple of (str, int)
        Maximal domain size per sort; sorts left out are bounded by their number of constants.
    constraint : object
        Closed formula all members satisfy, or None.
    discrete : tuple of str
        Sorts whose constants are pairwise distinct in every member.
    members : tuple of :obj:`genmodel.semantics.structure.MultiStructure`
        Explicit members, or None to enumerate all structures within the bounds.

    """
    signature: object
    bounds: tuple = ()
    constraint: object = None
    discrete: tuple = ()
    members: tuple = None

    def __post_init__(self):
        if self.constraint is not None:
            well_sorted_check(self.signature, self.constraint, closed=True).raise_for_violations()
        for sort in tuple(dict(self.bounds)) + tuple(self.discrete):
            if not self.signature.has_sort(sort):
                raise ValueError(f"Unknown sort '{sort}' in class specification.")
        for member in self.members or ():
            if member.signature != self.signature:
                raise ValueError('Explicit members must share the class signature.')

    def bound(self, sort):
        """Maximal domain size of `sort`."""
        return dict(self.bounds).get(sort, len(self.signature.constants_of(sort)))


def _quotients(names, bound, discrete):
    """Partitions as tuples of element ids, one per name."""
    if discrete:
        if len(names) <= bound:
            yield tuple(names)
        return

    def grow(prefix, blocks):
        if len(prefix) == len(names):
            leaders = []
            for block in prefix:
                leaders.append(names[prefix.index(block)])
            yield tuple(leaders)
            return
        for block in range(min(blocks + 1, bound)):
            yield from grow(prefix + (block,), max(blocks, block + 1))

    yield from grow((), 0)


def _subsets(rows):
    for mask in range(1 << len(rows)):
        yield frozenset(row for bit, row in enumerate(rows) if mask >> bit & 1)


def enumerate_class(spec):
    """Yield the members of `spec` in canonical order.

    Without explicit members, every structure with domain sizes within the bounds is produced once per
    constant-quotient representative: sorts vary slowest in declaration order, then relation extensions by increasing
    bit mask over their canonically ordered tuples. Members failing the constraint are skipped; the stream may be empty.

    Parameters
    ----------
    spec : :obj:`ClassSpec`

    Yields
    ------
    :obj:`genmodel.semantics.structure.MultiStructure`

    """
    sig = spec.signature
    if spec.members is not None:
        seen = set()
        for member in spec.members:
            if member not in seen and (spec.constraint is None or evaluate(member, spec.constraint)):
                seen.add(member)
                yield member
        return

    per_sort = [
        list(_quotients(sig.constants_of(sort), spec.bound(sort), sort in spec.discrete)) for sort in sig.sorts
    ]
    for quotient in product(*per_sort):
        domains, constants = {}, {}
        for sort, leaders in zip(sig.sorts, quotient):
            domains[sort] = tuple(dict.fromkeys(leaders))
            constants.update(zip(sig.constants_of(sort), leaders))
        choices = [
            list(_subsets(list(product(*(domains[sort] for sort in relation.sorts))))) for relation in sig.relations
        ]
        for extensions in product(*choices):
            structure = MultiStructure(
                signature=sig,
                domains=tuple(domains.items()),
                interpretation=tuple((name, constants[name]) for name in sig.all_constants()),
                extensions=tuple((relation.name, rows) for relation, rows in zip(sig.relations, extensions)),
            )
            if spec.constraint is None or evaluate(structure, spec.constraint):
                yield structure


def count_class(spec):
    """Number of members of `spec`."""
    return sum(1 for _ in enumerate_class(spec))
