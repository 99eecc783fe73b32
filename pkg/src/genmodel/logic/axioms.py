"""Generators for the equality and quantifier-elimination axioms of a standard theory.

All equality schemata are instantiated per constant tuple and rewritten into ⋀⋁ shape: an implication between
literal conjunctions becomes a single Or of the negated premises and the conclusion, wrapped in one And.

"""
import logging
from itertools import product

from .errors import SortError
from .formula import Const, Var, Atom, Eq, Not, And, Or, Exists, Forall, Axiom, Theory, free_variables, substitute

LOGGER = logging.getLogger(__name__)


def _clause(*parts):
    return And((Or(tuple(parts)),))


def _constants(sig, sort):
    return tuple(Const(name, sort) for name in sig.constants_of(sort))


def _tuples(sig, relation):
    return product(*(_constants(sig, sort) for sort in relation.sorts))


def _names(terms):
    return ','.join(term.name for term in terms)


def equality_axioms(sig):
    """Instantiate reflexivity, symmetry, transitivity and congruence for every same-sort constant tuple of `sig`.

    Parameters
    ----------
    sig : :obj:`genmodel.logic.signature.Signature`

    Returns
    -------
    :obj:`genmodel.logic.formula.Theory`
        Axioms tagged 'equality', in canonical order: per sort reflexivity, symmetry, transitivity, then congruence
        per relation. Every sentence classifies as and_or.

    """
    axioms = []
    for sort in sig.sorts:
        consts = _constants(sig, sort)
        axioms.extend(
            Axiom(_clause(Eq(c, c)), 'equality', f'eq.refl({c.name})') for c in consts
        )
        axioms.extend(
            Axiom(_clause(Not(Eq(c, d)), Eq(d, c)), 'equality', f'eq.sym({c.name},{d.name})')
            for c, d in product(consts, repeat=2)
        )
        axioms.extend(
            Axiom(_clause(Not(Eq(c, d)), Not(Eq(d, e)), Eq(c, e)), 'equality', f'eq.trans({c.name},{d.name},{e.name})')
            for c, d, e in product(consts, repeat=3)
        )
    for relation in sig.relations:
        for cs, ds in product(list(_tuples(sig, relation)), repeat=2):
            premises = (Not(Atom(relation.name, cs)),) + tuple(Not(Eq(d, c)) for c, d in zip(cs, ds))
            axioms.append(Axiom(
                _clause(*premises, Atom(relation.name, ds)),
                'equality',
                f'eq.cong.{relation.name}({_names(cs)};{_names(ds)})',
            ))
    LOGGER.debug('Generated %d equality axioms.', len(axioms))
    return Theory(tuple(axioms))


def qe_axioms(sig, witnesses=()):
    """Generate the quantifier-elimination axioms of `sig`.

    Parameters
    ----------
    sig : :obj:`genmodel.logic.signature.Signature`
    witnesses : iterable of object
        Open formulae with exactly one free variable of a declared sort.

    Returns
    -------
    :obj:`genmodel.logic.formula.Theory`
        Per sort, the surjectivity axiom ``Forall x:s . Or[(x = c_j); ...]`` with its quantifier-free expansion
        ``And[Or[(e = c_j); ...] : e of sort s]``; then, per witness ``psi(x)``, the biconditional
        ``Or[psi(c_j); ...] <-> Exists x:s . psi(x)`` as an And of two Ors. Witness axioms have no expansion.

    Raises
    ------
    :obj:`genmodel.logic.errors.SortError`
        If a witness does not have exactly one free variable of a declared sort.

    """
    axioms = []
    for sort in sig.sorts:
        consts = _constants(sig, sort)
        var = Var('x', sort)
        sentence = Forall(var.name, sort, Or(tuple(Eq(var, c) for c in consts)))
        expansion = And(tuple(Or(tuple(Eq(e, c) for c in consts)) for e in consts))
        axioms.append(Axiom(sentence, 'qe', f'qe.surj({sort})', expansion))

    for index, witness in enumerate(witnesses):
        variables = free_variables(witness)
        if len(variables) != 1:
            raise SortError(witness, 'witness needs exactly one free variable')
        var, = variables
        if not sig.has_sort(var.sort):
            raise SortError(witness, f"witness variable of undeclared sort '{var.sort}'")
        instances = Or(tuple(substitute(witness, var.name, c) for c in _constants(sig, var.sort)))
        exists = Exists(var.name, var.sort, witness)
        sentence = And((Or((Not(instances), exists)), Or((Not(exists), instances))))
        axioms.append(Axiom(sentence, 'qe', f'qe.wit({index})'))
    return Theory(tuple(axioms))
