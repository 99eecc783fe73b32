"""Processors of the build: schedule, construction, term model and verification, passing a :obj:`BuildState`.

"""
import logging
from dataclasses import dataclass, replace

from ..base import Param
from ..forcing.construction import Schedule, run_construction
from ..forcing.dense import dense_sets_from_theory, decision_dense_sets
from ..forcing.oracle import ClassOracle
from ..logic.formula import FormKind, classify
from ..termmodel.errors import MissingConjunct
from ..termmodel.model import build_term_model, verify_welldefined
from ..termmodel.verdict import verify_andor
from .base import Processor

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class BuildState:
    """What a build has computed so far.

    Attributes
    ----------
    scenario : :obj:`genmodel.scenario.Scenario`
    oracle : :obj:`genmodel.forcing.oracle.Oracle`
    schedule : :obj:`genmodel.forcing.construction.Schedule`
    sigma : :obj:`genmodel.forcing.construction.SigmaSet`
    trace : :obj:`genmodel.forcing.construction.Trace`
    maximality : :obj:`genmodel.forcing.construction.MaximalityReport`
    model : :obj:`genmodel.termmodel.model.TermModel`
    welldefined : :obj:`genmodel.termmodel.model.WelldefinedReport`
    verdicts : tuple of (str, :obj:`genmodel.termmodel.verdict.Verdict`)
        Per verified axiom, its label and verdict, or None if a conjunct was left open.

    """
    scenario: object
    oracle: object = None
    schedule: Schedule = None
    sigma: object = None
    trace: object = None
    maximality: object = None
    model: object = None
    welldefined: object = None
    verdicts: tuple = ()

    @classmethod
    def start(cls, scenario):
        """Initial state of a build of `scenario`."""
        return cls(scenario, ClassOracle(scenario.class_spec))

    def __getstate__(self):
        """All fields but the oracle, which caches the class as it is searched and is left out of memoization keys."""
        state = dict(self.__dict__)
        state['oracle'] = None
        return state

    def __setstate__(self, state):
        state = dict(state, oracle=ClassOracle(state['scenario'].class_spec))
        self.__dict__.update(state)


class ScheduleProcessor(Processor):
    """Collect the dense sets of the theory, the extra dense sets and, if requested, the decisions of all atoms.

    """
    decide_all = Param(bool, True, identifier=True)
    order = Param(str, 'theory-first', identifier=True)
    round_robin = Param(bool, False, identifier=True)
    limit = Param(int, 16, identifier=True)
    seed = Param(int, 0, identifier=True)

    def function(self, data):
        scenario = data.scenario
        theory = dense_sets_from_theory(scenario.theory, scenario.signature, self.limit) + list(scenario.dense)
        decide = decision_dense_sets(scenario.signature) if self.decide_all else []
        specs = theory + decide if self.order == 'theory-first' else decide + theory
        LOGGER.info('Scheduled %d dense set(s), %d decision(s).', len(specs), len(decide))
        return replace(data, schedule=Schedule(tuple(specs), self.round_robin, self.seed or None))


class ConstructionProcessor(Processor):
    """Meet the schedule from the start condition and report which notion of maximality was achieved."""
    maximality = Param(bool, True, identifier=True)

    def function(self, data):
        sigma, trace = run_construction(data.scenario.start, data.schedule, data.oracle)
        report = sigma.maximality(data.oracle) if self.maximality else None
        return replace(data, sigma=sigma, trace=trace, maximality=report)


class TermModelProcessor(Processor):
    """Build the term model of the constructed set."""
    strict = Param(bool, True, identifier=True)

    def function(self, data):
        return replace(data, model=build_term_model(data.sigma, data.scenario.signature, strict=self.strict))


class VerificationProcessor(Processor):
    """Check well-definedness and decide every ⋀⋁ axiom of the theory in the term model."""
    limit = Param(int, 16, identifier=True)

    def function(self, data):
        verdicts = []
        for axiom in data.scenario.theory:
            sentence = axiom.schedulable()
            if classify(sentence) is FormKind.OTHER:
                continue
            try:
                verdicts.append((axiom.label, verify_andor(data.model, sentence, data.sigma, data.trace, self.limit)))
            except MissingConjunct as err:
                LOGGER.warning("Axiom '%s' left open: %s", axiom.label, err)
                verdicts.append((axiom.label, None))
        return replace(data, welldefined=verify_welldefined(data.model, data.sigma), verdicts=tuple(verdicts))
