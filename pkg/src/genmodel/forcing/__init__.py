"""The forcing of a class of structures: conditions, oracles, dense sets and the construction meeting them."""
from .errors import ForcingError, NotACondition, NotDense, OracleFailure
from .condition import Condition
from .oracle import Oracle, ClassOracle, PredicateOracle, as_oracle, is_condition
from .dense import (
    DenseKind, DenseSpec, dense_sets_from_theory, decision_dense_sets, refine, refine_to_meet, dense_below,
)
from .construction import Schedule, TraceStep, Trace, MaximalityReport, SigmaSet, run_construction

__all__ = [
    'ForcingError', 'NotACondition', 'NotDense', 'OracleFailure',
    'Condition',
    'Oracle', 'ClassOracle', 'PredicateOracle', 'as_oracle', 'is_condition',
    'DenseKind', 'DenseSpec', 'dense_sets_from_theory', 'decision_dense_sets', 'refine', 'refine_to_meet',
    'dense_below',
    'Schedule', 'TraceStep', 'Trace', 'MaximalityReport', 'SigmaSet', 'run_construction',
]
