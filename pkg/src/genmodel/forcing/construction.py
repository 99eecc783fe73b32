"""The Rasiowa-Sikorski pass: an increasing chain of conditions meeting a schedule of dense sets in order."""
import logging
from dataclasses import dataclass
from itertools import zip_longest

from ..logic.formula import Literal
from ..logic.parser import render_literal
from ..semantics.structure import atomic_sentences
from .condition import Condition
from .dense import refine
from .errors import NotACondition, NotDense
from .oracle import as_oracle

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Schedule:
    """Ordered dense set specifications.

    Attributes
    ----------
    specs : tuple of :obj:`genmodel.forcing.dense.DenseSpec`
    round_robin : bool
        Interleave the spec groups, one spec of each group in turn, in order of first appearance of the groups.
    seed : int
        Reserved for tie-breaking; construction is canonical and ignores it.

    """
    specs: tuple = ()
    round_robin: bool = False
    seed: int = None

    def entries(self):
        """The specs in the order they are met."""
        if not self.round_robin:
            return tuple(self.specs)
        groups = {}
        for spec in self.specs:
            groups.setdefault(spec.group, []).append(spec)
        return tuple(spec for row in zip_longest(*groups.values()) for spec in row if spec is not None)

    def __len__(self):
        return len(self.specs)


@dataclass(frozen=True)
class TraceStep:
    """One step of a construction.

    Attributes
    ----------
    index : int
        Position in the schedule entries.
    label : str
        Provenance of the dense set met.
    before : :obj:`genmodel.forcing.condition.Condition`
    added : tuple of :obj:`genmodel.logic.formula.Literal`
        Literals added to meet the dense set, in canonical order; empty if it was met already.
    witness : str
        Identifier of the class member realizing the condition after the step.

    """
    index: int
    label: str
    before: Condition
    added: tuple
    witness: str

    @property
    def after(self):
        """The condition after the step."""
        return self.before.extend(self.added)

    def render(self):
        """The trace line of this step."""
        added = ', '.join(render_literal(literal) for literal in self.added)
        return f'step {self.index} | dense {self.label} | add {{{added}}} | witness {self.witness}'


@dataclass(frozen=True)
class Trace:
    """The steps of a construction, starting from `start`."""
    start: Condition
    steps: tuple = ()

    def conditions(self):
        """The chain of conditions: the start, then the condition after each step."""
        chain = [self.start]
        for step in self.steps:
            chain.append(chain[-1].extend(step.added))
        return tuple(chain)

    def step_adding(self, literal):
        """Index of the step that added `literal`; -1 if it was in the start condition, None if never added."""
        if literal in self.start:
            return -1
        for step in self.steps:
            if literal in step.added:
                return step.index
        return None

    def render(self):
        """Line-oriented export, one line per step."""
        return '\n'.join(step.render() for step in self.steps)

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class MaximalityReport:
    """Which notion of maximality a constructed set achieves.

    Attributes
    ----------
    decides_all : bool
        Every atomic sentence or its negation belongs to the set.
    no_proper_extension : bool
        No literal outside the set can be added while staying a condition.
    undecided : tuple
        Atomic sentences decided neither way, in canonical order.

    """
    decides_all: bool
    no_proper_extension: bool
    undecided: tuple = ()


@dataclass(frozen=True)
class SigmaSet:
    """The union of the chain of a construction."""
    condition: Condition
    trace: Trace = None

    @property
    def signature(self):
        """Signature of the literals."""
        return self.condition.signature

    @property
    def literals(self):
        """Literals in canonical order."""
        return self.condition.literals

    def decides(self, atom):
        """Whether `atom` or its negation is in the set."""
        return Literal(atom) in self.condition or Literal(atom, False) in self.condition

    def undecided(self):
        """Atomic sentences decided neither way, in canonical order."""
        return tuple(atom for atom in atomic_sentences(self.signature) if not self.decides(atom))

    def is_complete(self):
        """Whether every atomic sentence is decided."""
        return not self.undecided()

    def maximality(self, oracle):
        """Report both notions of maximality against the class behind `oracle`."""
        oracle = as_oracle(oracle)
        undecided = self.undecided()
        proper = any(
            oracle.is_condition(self.condition.extend((literal,)))
            for atom in undecided for literal in (Literal(atom), Literal(atom, False))
        )
        return MaximalityReport(decides_all=not undecided, no_proper_extension=not proper, undecided=undecided)

    def render(self):
        """Canonical literal list, one per line."""
        return '\n'.join(render_literal(literal) for literal in self.literals)

    def __contains__(self, literal):
        return literal in self.condition

    def __iter__(self):
        return iter(self.literals)

    def __len__(self):
        return len(self.literals)


def run_construction(start, schedule, oracle):
    """Meet every entry of `schedule` once, in order, by an increasing chain of conditions from `start`.

    Parameters
    ----------
    start : :obj:`genmodel.forcing.condition.Condition`
    schedule : :obj:`Schedule`
    oracle : :obj:`genmodel.forcing.oracle.Oracle` or :obj:`genmodel.semantics.enumeration.ClassSpec`

    Returns
    -------
    tuple of (:obj:`SigmaSet`, :obj:`Trace`)

    Raises
    ------
    :obj:`genmodel.forcing.errors.NotACondition`
        If `start` is not realized by any class member.
    :obj:`genmodel.forcing.errors.NotDense`
        If an entry cannot be met, with its `step` set.

    """
    oracle = as_oracle(oracle)
    if not oracle.is_condition(start):
        raise NotACondition(start)
    if schedule.seed is not None:
        LOGGER.info('Seed %s ignored: construction is canonical.', schedule.seed)
    current, steps = start, []
    for index, spec in enumerate(schedule.entries()):
        try:
            refined, witness = refine(current, spec, oracle)
        except NotDense as err:
            raise NotDense(err.spec, err.condition, index) from err
        step = TraceStep(index, spec.label, current, refined.difference(current), f'm{witness}')
        LOGGER.debug(step.render())
        steps.append(step)
        current = refined
    trace = Trace(start, tuple(steps))
    return SigmaSet(current, trace), trace
