"""Test module for genmodel/forcing/construction.py"""
import pytest

from genmodel.forcing.condition import Condition
from genmodel.forcing.construction import Schedule, run_construction
from genmodel.forcing.dense import DenseSpec, decision_dense_sets
from genmodel.forcing.errors import NotACondition, NotDense
from genmodel.forcing.oracle import ClassOracle
from genmodel.logic.parser import parse_formula, parse_literal, parse_literals
from genmodel.logic.signature import Signature
from genmodel.semantics.enumeration import ClassSpec, enumerate_class
from genmodel.semantics.structure import realized_literals


@pytest.fixture(scope='module')
def signature():
    """Fixture single-sorted signature with a unary relation"""
    return Signature.create(['s'], {'s': ['c0', 'c1']}, {'P': ['s']})


@pytest.fixture(scope='module')
def spec(signature):
    """Fixture class: exactly one element has P"""
    constraint = parse_formula('Exists x:s . And[P(x); Forall y:s . Or[!P(y); (x = y)]]', signature)
    return ClassSpec(signature, constraint=constraint)


@pytest.fixture(scope='module')
def built(signature, spec):
    """Fixture construction deciding every atom after hitting !P(c0)"""
    hit = DenseSpec.hit_disjunct(signature, parse_literals('{!P(c0)}', signature), 'not-p0', group='theory')
    schedule = Schedule(tuple([hit] + decision_dense_sets(signature)))
    oracle = ClassOracle(spec)
    sigma, trace = run_construction(Condition(signature), schedule, oracle)
    return sigma, trace, oracle


class TestSchedule:
    """Test class for Schedule"""
    @staticmethod
    def test_round_robin(signature):
        """Round robin should interleave groups in order of first appearance"""
        first, second = (DenseSpec.hit_disjunct(signature, parse_literals(text, signature), text, group='theory')
                         for text in ('{P(c0)}', '{P(c1)}'))
        decide = DenseSpec.decide(parse_literal('P(c0)', signature).atom)
        schedule = Schedule((first, second, decide), round_robin=True)
        assert schedule.entries() == (first, decide, second)
        assert Schedule((first, second, decide)).entries() == (first, second, decide)


class TestRunConstruction:
    """Test class for run_construction"""
    @staticmethod
    def test_chain(built):
        """Conditions along the trace should increase"""
        _, trace, _ = built
        chain = trace.conditions()
        assert all(earlier.issubset(later) for earlier, later in zip(chain, chain[1:]))

    @staticmethod
    def test_complete(built, spec):
        """Deciding all atoms should yield the diagram of a class member"""
        sigma, _, oracle = built
        assert sigma.is_complete()
        assert sigma.condition.members in [realized_literals(member).members for member in enumerate_class(spec)]
        report = sigma.maximality(oracle)
        assert report.decides_all and report.no_proper_extension

    @staticmethod
    def test_meets_every_entry(built, signature):
        """Every scheduled set should be met by the condition after its step"""
        sigma, trace, _ = built
        assert parse_literal('!P(c0)', signature) in sigma
        assert len(trace) == 1 + 6
        assert all(step.after.issubset(sigma.condition) for step in trace.steps)

    @staticmethod
    def test_trace_lines(built):
        """Trace lines should name the step, the set, the added literals and the witness"""
        _, trace, _ = built
        lines = trace.render().splitlines()
        assert lines[0] == 'step 0 | dense not-p0 | add {!P(c0)} | witness m2'
        assert lines[-1] == 'step 6 | dense decide P(c1) | add {P(c1)} | witness m2'

    @staticmethod
    def test_step_adding(built, signature):
        """The step adding a literal should be found"""
        _, trace, _ = built
        assert trace.step_adding(parse_literal('!P(c0)', signature)) == 0
        assert trace.step_adding(parse_literal('P(c0)', signature)) is None

    @staticmethod
    def test_deterministic(signature, spec, built):
        """Constructions should not depend on the seed"""
        schedule = Schedule(tuple(decision_dense_sets(signature)), seed=7)
        first, _ = run_construction(Condition(signature), schedule, ClassOracle(spec))
        second, _ = run_construction(Condition(signature), Schedule(schedule.specs), spec)
        assert first.render() == second.render()

    @staticmethod
    def test_not_a_condition(signature, spec):
        """Starting outside the forcing should raise NotACondition"""
        start = Condition.create(signature, parse_literals('{!P(c0), !P(c1)}', signature))
        with pytest.raises(NotACondition):
            run_construction(start, Schedule(), spec)

    @staticmethod
    def test_not_dense(signature, spec):
        """Unmeetable entries should raise NotDense with their step"""
        specs = tuple(DenseSpec.hit_disjunct(signature, parse_literals(text, signature), text)
                      for text in ('{!P(c0)}', '{!P(c1)}'))
        with pytest.raises(NotDense) as excinfo:
            run_construction(Condition(signature), Schedule(specs), spec)
        assert excinfo.value.step == 1
        assert str(excinfo.value).startswith('step 1: ')

    @staticmethod
    def test_partial(signature, spec):
        """Without decisions, the set should be undecided on some atoms and properly extendable"""
        hit = DenseSpec.hit_disjunct(signature, parse_literals('{P(c1)}', signature), 'p1')
        sigma, _ = run_construction(Condition(signature), Schedule((hit,)), spec)
        report = sigma.maximality(spec)
        assert not report.decides_all
        assert not report.no_proper_extension
        assert len(report.undecided) == 5
