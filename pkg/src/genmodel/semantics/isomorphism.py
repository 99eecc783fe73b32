"""Multi-sorted isomorphism search, and the single-sorted merge of a multi-sorted structure with sort predicates."""
import logging
from dataclasses import dataclass
from itertools import combinations, permutations, product

from ..logic.formula import Var, Atom, Eq, Not, And, Or, Exists, Forall
from ..logic.signature import Signature, Relation
from .structure import MultiStructure, evaluate

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiMap:
    """Per-sort bijections between the domains of two structures.

    Attributes
    ----------
    maps : tuple of (str, tuple of (str, str))
        Per sort, in sort order, the pairs (source element, target element).

    """
    maps: tuple

    def apply(self, sort, element):
        """Image of `element` of `sort`."""
        return dict(dict(self.maps)[sort])[element]

    def is_identity(self):
        """Whether every per-sort map fixes each element."""
        return all(source == target for _, pairs in self.maps for source, target in pairs)


def _sort_bijections(a, b, sort):
    """Yield the bijections domain_a(sort) -> domain_b(sort) that preserve the constants of `sort`."""
    sig = a.signature
    forced = {}
    for name in sig.constants_of(sort):
        source, target = a.value(name), b.value(name)
        if forced.setdefault(source, target) != target:
            return
    if len(set(forced.values())) != len(forced):
        return
    free_sources = [element for element in a.domain(sort) if element not in forced]
    free_targets = [element for element in b.domain(sort) if element not in set(forced.values())]
    for image in permutations(free_targets):
        yield {**forced, **dict(zip(free_sources, image))}


def _preserves_relations(a, b, maps):
    for relation in a.signature.relations:
        image = {tuple(maps[sort][element] for sort, element in zip(relation.sorts, row))
                 for row in a.extension(relation.name)}
        if image != b.extension(relation.name):
            return False
    return True


def find_multisorted_iso(a, b):
    """Search exhaustively for a multi-sorted isomorphism from `a` onto `b`.

    Per sort, candidate bijections are those preserving the constants; since constants name every element, at most one
    candidate survives per sort once the structures agree on the sizes.

    Parameters
    ----------
    a : :obj:`genmodel.semantics.structure.MultiStructure`
    b : :obj:`genmodel.semantics.structure.MultiStructure`
        Must share the signature of `a`.

    Returns
    -------
    :obj:`MultiMap` or None

    """
    if a.signature != b.signature:
        raise ValueError('Isomorphism search requires structures over the same signature.')
    if a.sizes() != b.sizes():
        return None
    sorts = a.signature.sorts
    for choice in product(*(list(_sort_bijections(a, b, sort)) for sort in sorts)):
        maps = dict(zip(sorts, choice))
        if _preserves_relations(a, b, maps):
            return MultiMap(tuple(
                (sort, tuple((element, maps[sort][element]) for element in a.domain(sort))) for sort in sorts
            ))
    return None


def _fresh(name, taken):
    while name in taken:
        name += '_'
    return name


def merged_signature(sig):
    """The single-sorted signature merging all sorts of `sig`, with one unary sort predicate per sort.

    Returns
    -------
    tuple
        The merged signature, its sort name and the sort predicate names in sort order.

    """
    taken = set(sig.sorts) | set(sig.all_constants()) | {relation.name for relation in sig.relations}
    universe = _fresh('U', taken)
    taken.add(universe)
    predicates = []
    for sort in sig.sorts:
        predicates.append(_fresh(f'X_{sort}', taken))
        taken.add(predicates[-1])
    relations = tuple(Relation(relation.name, (universe,) * relation.arity) for relation in sig.relations)
    relations += tuple(Relation(name, (universe,)) for name in predicates)
    merged = Signature(sorts=(universe,), constants=((universe, sig.all_constants()),), relations=relations)
    return merged, universe, tuple(predicates)


def merge_sorts(structure):
    """Union the sort domains of `structure` into one domain, marking each sort by a unary predicate.

    Overlapping sorts share elements in the merge, which a multi-sorted sentence cannot detect but a sentence over the
    merged signature can.

    Returns
    -------
    :obj:`genmodel.semantics.structure.MultiStructure`

    """
    sig = structure.signature
    merged, universe, predicates = merged_signature(sig)
    domain = tuple(dict.fromkeys(element for _, elements in structure.domains for element in elements))
    extensions = tuple(structure.extensions) + tuple(
        (name, frozenset((element,) for element in structure.domain(sort)))
        for name, sort in zip(predicates, sig.sorts)
    )
    return MultiStructure(
        signature=merged,
        domains=((universe, domain),),
        interpretation=structure.interpretation,
        extensions=extensions,
    )


def _sentence_battery(sig):
    """Yield short sentences over the merged signature of `sig`, simplest first."""
    _, universe, predicates = merged_signature(sig)
    u, v = Var('u', universe), Var('v', universe)
    for first, second in combinations(predicates, 2):
        yield Exists('u', universe, And((Atom(first, (u,)), Atom(second, (u,)))))
    for first, second in permutations(predicates, 2):
        yield Forall('u', universe, Or((Not(Atom(first, (u,))), Atom(second, (u,)))))
    for name in predicates:
        yield Forall('u', universe, Atom(name, (u,)))
    for first, second in product(predicates, repeat=2):
        yield Exists('u', universe, Exists('v', universe, And((
            Atom(first, (u,)), Atom(second, (v,)), Not(Eq(u, v))))))
    for first, second, third in combinations(predicates, 3):
        yield Exists('u', universe, And((Atom(first, (u,)), Atom(second, (u,)), Atom(third, (u,)))))


def distinguishing_sentence(a, b):
    """Search for a sentence over the merged signature that holds in exactly one of the merges of `a` and `b`.

    Returns
    -------
    object
        The first sentence of a fixed battery telling the merged structures apart, or None.

    """
    if a.signature != b.signature:
        raise ValueError('Both structures must share a signature.')
    left, right = merge_sorts(a), merge_sorts(b)
    for sentence in _sentence_battery(a.signature):
        if evaluate(left, sentence) != evaluate(right, sentence):
            LOGGER.debug('Merged structures differ on %r.', sentence)
            return sentence
    return None
