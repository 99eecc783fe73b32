"""Truth of ⋀⋁ sentences in a term model, certified conjunct by conjunct against the constructed set of literals."""
import logging
from dataclasses import dataclass

from ..forcing.dense import DenseSpec, DenseKind, dense_below
from ..forcing.oracle import as_oracle
from ..logic.formula import BigAnd, iter_conjuncts, normalize
from ..logic.parser import render_literal
from ..semantics.structure import evaluate
from .errors import MissingConjunct, TermModelError

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Evidence:
    """Why one conjunct is met or refuted.

    Attributes
    ----------
    index : int
        Position of the conjunct.
    met : bool
        Whether a candidate literal of the conjunct is in the set.
    literals : tuple
        The meeting literal, or the negations of all candidates if refuted.
    step : int
        Trace step that added the meeting literal; -1 if it was in the start condition; None without a trace or when
        refuted.

    """
    index: int
    met: bool
    literals: tuple
    step: int = None

    def render(self):
        """One line describing this piece of evidence."""
        literals = ', '.join(render_literal(literal) for literal in self.literals)
        if not self.met:
            return f'conjunct {self.index}: refuted by {{{literals}}}'
        where = '' if self.step is None else (' (start)' if self.step < 0 else f' (step {self.step})')
        return f'conjunct {self.index}: met by {literals}{where}'


@dataclass(frozen=True)
class Verdict:
    """Truth value of a ⋀⋁ sentence in a term model with its per-conjunct evidence.

    Attributes
    ----------
    value : bool
        Whether every conjunct is met by the set of literals.
    evidence : tuple of :obj:`Evidence`
    direct : bool
        Truth by direct evaluation in the term model, or None for countable conjunctions, which are certified only.

    """
    value: bool
    evidence: tuple
    direct: bool = None

    @property
    def certified_only(self):
        """Whether the verdict rests on the evidence alone."""
        return self.direct is None

    def render(self):
        """Verdict line followed by the evidence lines."""
        head = f"verdict: {'true' if self.value else 'false'}" + (' (certificate only)' if self.certified_only else '')
        return '\n'.join([head] + [evidence.render() for evidence in self.evidence])


def verify_andor(model, formula, sigma, trace=None, limit=None):
    """Decide a ⋀⋁ sentence in `model` from the literals of `sigma`, and cross-check by direct evaluation.

    Parameters
    ----------
    model : :obj:`genmodel.termmodel.model.TermModel`
    formula : object
        Sentence of literal or ⋀⋁ shape.
    sigma : :obj:`genmodel.forcing.construction.SigmaSet`
    trace : :obj:`genmodel.forcing.construction.Trace`, optional
        Defaults to the trace of `sigma`; cited as the step meeting each conjunct.
    limit : int, optional
        Number of conjuncts inspected of a countable conjunction.

    Returns
    -------
    :obj:`Verdict`

    Raises
    ------
    :obj:`genmodel.termmodel.errors.MissingConjunct`
        If a conjunct is neither met nor refuted.
    :obj:`genmodel.termmodel.errors.TermModelError`
        If the evidence and direct evaluation disagree.

    """
    trace = trace if trace is not None else getattr(sigma, 'trace', None)
    members = getattr(sigma, 'condition', sigma).members
    evidence = []
    for index, clause in enumerate(iter_conjuncts(formula, limit)):
        hit = next((literal for literal in clause if literal in members), None)
        if hit is not None:
            step = None if trace is None else trace.step_adding(hit)
            evidence.append(Evidence(index, True, (hit,), step))
        elif all(literal.negate() in members for literal in clause):
            evidence.append(Evidence(index, False, tuple(literal.negate() for literal in clause)))
        else:
            raise MissingConjunct(index)
    value = all(item.met for item in evidence)
    if isinstance(normalize(formula), BigAnd):
        return Verdict(value, tuple(evidence))
    direct = evaluate(model.as_structure(), formula)
    if direct != value:
        raise TermModelError(f'Evidence gives {value}, direct evaluation gives {direct}.')
    return Verdict(value, tuple(evidence), direct)


def conjunct_specs(formula, limit=None):
    """The `hit_disjunct` dense set specifications of the conjuncts of a ⋀⋁ sentence."""
    return [
        DenseSpec(DenseKind.HIT_DISJUNCT, f'conjunct {index}', tuple(dict.fromkeys(clause)))
        for index, clause in enumerate(iter_conjuncts(formula, limit))
    ]


def density_truth(formula, trace, oracle, exhaustive=False, limit=None):
    """Whether some condition of the chain of `trace` has every conjunct's dense set dense below it.

    Returns
    -------
    tuple
        The outcome, and the chain position of the first such condition or None.

    Raises
    ------
    :obj:`genmodel.logic.errors.UnboundedFamily`
        If `formula` is a countable conjunction and `limit` is None.

    """
    oracle = as_oracle(oracle)
    specs = conjunct_specs(formula, limit)
    for position, condition in enumerate(trace.conditions()):
        if all(dense_below(condition, spec, oracle, exhaustive) for spec in specs):
            LOGGER.debug('Every conjunct dense below chain position %d.', position)
            return True, position
    return False, None
