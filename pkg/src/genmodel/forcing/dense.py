"""Dense set specifications, their derivation from theories and the refinement step meeting them.

A specification describes a set D of conditions by the literals a member must contain: `decide` specs are met by
conditions deciding an atomic sentence, `hit_disjunct` specs by conditions holding one candidate of a conjunct and
`custom` specs by conditions passing a predicate.

"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from ..logic.errors import NotAndOr
from ..logic.formula import FormKind, Literal, BigAnd, classify, iter_conjuncts, sort_literals
from ..logic.parser import render_literal
from ..semantics.structure import atomic_sentences
from .condition import Condition
from .errors import NotDense, OracleFailure
from .oracle import as_oracle

LOGGER = logging.getLogger(__name__)


class DenseKind(Enum):
    """The three shapes of dense set specifications."""
    DECIDE = 'decide'
    HIT_DISJUNCT = 'hit_disjunct'
    CUSTOM = 'custom'


@dataclass(frozen=True)
class DenseSpec:
    """Specification of a dense set of conditions.

    Attributes
    ----------
    kind : :obj:`DenseKind`
    label : str
        Provenance, printed in traces.
    literals : tuple of :obj:`genmodel.logic.formula.Literal`
        For `decide`, the positive literal of the decided atom; for `hit_disjunct`, the candidates in canonical order.
    predicate : callable
        For `custom`, decides whether a condition is in the set.
    bound : int
        For `custom`, the maximal number of literals added while searching an extension.
    group : str
        Schedule group, used for round-robin interleaving.

    """
    kind: DenseKind
    label: str
    literals: tuple = ()
    predicate: object = field(default=None, compare=False, hash=False, repr=False)
    bound: int = None
    group: str = 'default'

    def __post_init__(self):
        if self.kind is DenseKind.CUSTOM:
            if self.predicate is None or self.bound is None or self.bound < 0:
                raise ValueError('Custom dense specs need a predicate and a non-negative search bound.')
        elif not self.literals:
            raise ValueError(f"Dense spec '{self.label}' needs a nonempty list of literals.")
        if self.kind is DenseKind.DECIDE and (len(self.literals) != 1 or not self.literals[0].positive):
            raise ValueError('Decide specs hold exactly one positive literal.')

    @classmethod
    def decide(cls, atom, label=None, group='decide'):
        """Spec met by conditions holding `atom` or its negation."""
        literal = Literal(atom)
        return cls(DenseKind.DECIDE, label or f'decide {render_literal(literal)}', (literal,), group=group)

    @classmethod
    def hit_disjunct(cls, sig, candidates, label, group='theory'):
        """Spec met by conditions holding one of `candidates`."""
        return cls(DenseKind.HIT_DISJUNCT, label, sort_literals(sig, candidates), group=group)

    @classmethod
    def custom(cls, predicate, bound, label, group='custom'):
        """Spec met by conditions passing `predicate`, searched up to `bound` added literals."""
        return cls(DenseKind.CUSTOM, label, predicate=predicate, bound=bound, group=group)

    def is_met(self, condition):
        """Whether `condition` belongs to the specified set."""
        if self.kind is DenseKind.DECIDE:
            literal, = self.literals
            return literal in condition or literal.negate() in condition
        if self.kind is DenseKind.HIT_DISJUNCT:
            return any(literal in condition for literal in self.literals)
        return bool(self.predicate(condition))

    def options(self, condition):
        """Yield the extensions of `condition` meeting this spec, most preferred first."""
        if self.kind is DenseKind.DECIDE:
            literal, = self.literals
            yield condition.extend((literal,))
            yield condition.extend((literal.negate(),))
        elif self.kind is DenseKind.HIT_DISJUNCT:
            for literal in self.literals:
                yield condition.extend((literal,))
        else:
            vocabulary = [
                literal for atom in atomic_sentences(condition.signature)
                for literal in (Literal(atom), Literal(atom, False)) if literal not in condition
            ]
            for size in range(self.bound + 1):
                for added in combinations(vocabulary, size):
                    candidate = condition.extend(added)
                    if self.is_met(candidate):
                        yield candidate


def dense_sets_from_theory(theory, sig=None, limit=None, group='theory'):
    """One `hit_disjunct` spec per conjunct of every schedulable axiom of `theory`.

    Parameters
    ----------
    theory : :obj:`genmodel.logic.formula.Theory`
    sig : :obj:`genmodel.logic.signature.Signature`, optional
        Orders the candidates of each conjunct canonically; without it they keep their order in the axiom.
    limit : int, optional
        Number of conjuncts drawn from countable conjunctions; required if the theory holds one.
    group : str
        Schedule group of the produced specs.

    Returns
    -------
    list of :obj:`DenseSpec`

    Raises
    ------
    :obj:`genmodel.logic.errors.NotAndOr`
        If an axiom is neither a literal nor of ⋀⋁ shape, and is not a quantified axiom of the standard theory.

    """
    specs = []
    for axiom in theory:
        sentence = axiom.schedulable()
        if classify(sentence) is FormKind.OTHER:
            if axiom.provenance == 'qe':
                LOGGER.info("Skipping axiom '%s': it holds in every term model.", axiom.label)
                continue
            raise NotAndOr(axiom.sentence)
        if isinstance(sentence, BigAnd) and limit is None:
            raise ValueError(f"Axiom '{axiom.label}' is a countable conjunction; a conjunct limit is required.")
        clauses = list(iter_conjuncts(sentence, limit))
        for index, clause in enumerate(clauses):
            label = axiom.label if len(clauses) == 1 else f'{axiom.label}[{index}]'
            specs.append(DenseSpec(DenseKind.HIT_DISJUNCT, label, _ordered(sig, clause), group=group))
    LOGGER.debug('Derived %d dense set(s) from %d axiom(s).', len(specs), len(theory))
    return specs


def _ordered(sig, clause):
    if sig is None:
        return tuple(dict.fromkeys(clause))
    return sort_literals(sig, clause)


def decision_dense_sets(sig, group='decide'):
    """One `decide` spec per atomic sentence of `sig`, in canonical order."""
    return [DenseSpec.decide(atom, group=group) for atom in atomic_sentences(sig)]


def refine(condition, spec, oracle):
    """Meet `spec` below `condition`.

    Returns
    -------
    tuple
        The least preferred-order extension meeting `spec` that stays a condition, and the index of its witness.

    Raises
    ------
    :obj:`NotDense`
        If no extension stays a condition.
    :obj:`OracleFailure`
        If a custom spec exhausts its search bound.

    """
    oracle = as_oracle(oracle)
    if spec.is_met(condition):
        index = oracle.witness_index(condition)
        if index is not None:
            return condition, index
    for candidate in spec.options(condition):
        index = oracle.witness_index(candidate)
        if index is not None:
            return candidate, index
    if spec.kind is DenseKind.CUSTOM:
        raise OracleFailure(f"Custom dense spec '{spec.label}' not met within {spec.bound} added literal(s).")
    LOGGER.warning("Dense spec '%s' cannot be met below %s.", spec.label, condition.render())
    raise NotDense(spec, condition)


def refine_to_meet(condition, spec, oracle):
    """The canonically least extension of `condition` that meets `spec` and is realized by a class member.

    Parameters
    ----------
    condition : :obj:`genmodel.forcing.condition.Condition`
    spec : :obj:`DenseSpec`
    oracle : :obj:`genmodel.forcing.oracle.Oracle` or :obj:`genmodel.semantics.enumeration.ClassSpec`

    Returns
    -------
    :obj:`genmodel.forcing.condition.Condition`

    """
    return refine(condition, spec, oracle)[0]


def _member_density(condition, spec, oracle):
    sig = condition.signature
    for index, _ in enumerate(oracle.members()):
        diagram = oracle.diagram(index)
        if condition.members <= diagram and not spec.is_met(Condition(sig, sort_literals(sig, diagram))):
            return False
    return True


def _exhaustive_density(condition, spec, oracle):
    atoms = [atom for atom in atomic_sentences(condition.signature)
             if Literal(atom) not in condition and Literal(atom, False) not in condition]

    def extensions(current, position):
        if not oracle.is_condition(current):
            return
        if position == len(atoms):
            yield current
            return
        yield from extensions(current, position + 1)
        yield from extensions(current.extend((Literal(atoms[position]),)), position + 1)
        yield from extensions(current.extend((Literal(atoms[position], False),)), position + 1)

    for extension in extensions(condition, 0):
        if not any(oracle.is_condition(option) for option in spec.options(extension)):
            return False
    return True


def dense_below(condition, spec, oracle, exhaustive=False):
    """Whether the set specified by `spec` is dense below `condition` in the forcing of the class.

    With `exhaustive`, every extension of `condition` over the finite atomic vocabulary that stays a condition is
    checked for an extension meeting `spec`. Otherwise the check runs over the complete diagrams of the members
    realizing `condition`, the only conditions below which nothing but themselves lies. `custom` specs are always
    checked exhaustively, within the search bound of the spec.

    Returns
    -------
    bool
        False in particular if `condition` is not a condition at all.

    """
    oracle = as_oracle(oracle)
    if not oracle.is_condition(condition):
        return False
    if exhaustive or spec.kind is DenseKind.CUSTOM:
        return _exhaustive_density(condition, spec, oracle)
    return _member_density(condition, spec, oracle)
