"""Test module for genmodel/processor/construction.py"""
import pickle

import pytest

from genmodel.forcing.dense import DenseKind
from genmodel.io import HashedMemory, ext_hash
from genmodel.pipeline.build import BuildPipeline
from genmodel.processor.construction import (
    BuildState, ScheduleProcessor, ConstructionProcessor, TermModelProcessor, VerificationProcessor,
)
from genmodel.scenario import load_scenario

DECISIONS = 9 + 3


@pytest.fixture(scope='module')
def scenario():
    """The bundled scenario of structures with exactly one P element."""
    return load_scenario('exactly-one-p')


@pytest.fixture(scope='module')
def scheduled(scenario):
    """State after scheduling with default parameters."""
    return ScheduleProcessor()(BuildState.start(scenario))


@pytest.fixture(scope='module')
def constructed(scheduled):
    """State after the construction."""
    return ConstructionProcessor()(scheduled)


@pytest.fixture(scope='module')
def verified(constructed):
    """State after building and verifying the term model."""
    return VerificationProcessor()(TermModelProcessor()(constructed))


class TestScheduleProcessor:
    """Test class for ScheduleProcessor"""
    @staticmethod
    def test_theory_first(scheduled):
        """Decisions should come last, one per atomic sentence"""
        kinds = [spec.kind for spec in scheduled.schedule.specs]
        assert kinds[-DECISIONS:] == [DenseKind.DECIDE] * DECISIONS
        assert DenseKind.HIT_DISJUNCT in kinds[:-DECISIONS]
        assert scheduled.sigma is None

    @staticmethod
    def test_decide_first(scenario):
        """With decide-first order, decisions should come first"""
        state = ScheduleProcessor(order='decide-first')(BuildState.start(scenario))
        kinds = [spec.kind for spec in state.schedule.specs]
        assert kinds[:DECISIONS] == [DenseKind.DECIDE] * DECISIONS

    @staticmethod
    def test_no_decisions(scenario, scheduled):
        """Without decide_all, only the theory's dense sets should be scheduled"""
        state = ScheduleProcessor(decide_all=False)(BuildState.start(scenario))
        assert len(state.schedule) == len(scheduled.schedule) - DECISIONS
        assert all(spec.kind is not DenseKind.DECIDE for spec in state.schedule.specs)

    @staticmethod
    def test_round_robin(scenario):
        """The round robin flag should be passed on to the schedule"""
        state = ScheduleProcessor(round_robin=True, seed=4)(BuildState.start(scenario))
        assert state.schedule.round_robin
        assert state.schedule.seed == 4
        entries = state.schedule.entries()
        assert entries[0].group == 'theory'
        assert entries[1].group == 'decide'


class TestConstructionProcessor:
    """Test class for ConstructionProcessor"""
    @staticmethod
    def test_complete(constructed):
        """The constructed set should decide every atomic sentence"""
        assert constructed.sigma.is_complete()
        assert len(constructed.sigma) == DECISIONS
        assert constructed.maximality.decides_all
        assert constructed.maximality.no_proper_extension

    @staticmethod
    def test_trace(constructed, scheduled):
        """The trace should have one step per scheduled dense set"""
        assert len(constructed.trace) == len(scheduled.schedule.entries())

    @staticmethod
    def test_without_maximality(scheduled):
        """The maximality report should be skipped on request"""
        assert ConstructionProcessor(maximality=False)(scheduled).maximality is None


class TestTermModelProcessor:
    """Test class for TermModelProcessor and VerificationProcessor"""
    @staticmethod
    def test_single_p_class(verified):
        """The term model should be a member of the class, with exactly one P element"""
        assert len(verified.model.extension('P')) == 1
        assert 1 <= verified.model.sizes()[0] <= 3
        assert verified.scenario.class_spec.constraint is not None

    @staticmethod
    def test_verdicts(verified):
        """Every verified axiom should be true, and the model well defined"""
        assert verified.welldefined.ok
        assert verified.verdicts
        assert all(verdict is not None and verdict.value for _, verdict in verified.verdicts)
        assert 'some-p' in dict(verified.verdicts)


class TestMemoizedBuild:
    """Test class for memoizing build steps through a storage"""
    @staticmethod
    def test_state_pickles(constructed):
        """A state should pickle without its oracle, and get a fresh one back"""
        restored = pickle.loads(pickle.dumps(constructed))
        assert restored.sigma == constructed.sigma
        assert restored.oracle is not constructed.oracle
        assert restored.oracle.is_condition(restored.sigma.condition)

    @staticmethod
    def test_key_ignores_oracle(scenario):
        """Searching the class should not change the memoization key of a state"""
        state = ScheduleProcessor()(BuildState.start(scenario))
        before = ext_hash(state)
        ConstructionProcessor()(state)
        assert ext_hash(state) == before

    @staticmethod
    def test_second_run_hits_cache(scenario):
        """A second build of the same state should read the construction from the storage"""
        memory = HashedMemory()
        pipeline = BuildPipeline.for_scenario(scenario)
        pipeline.construction = ConstructionProcessor(io=memory)
        start = BuildState.start(scenario)
        first = pipeline(start)
        assert len(memory) == 1
        second = pipeline(start)
        assert len(memory) == 1
        assert second.trace is first.trace
        assert second.sigma is first.sigma
