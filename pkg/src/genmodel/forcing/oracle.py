"""Membership oracles of the forcing: decide whether a condition is realized by some member of a class.

An oracle scans a deterministic stream of candidate structures once, keeping the accepted members together with their
atomic diagrams, so later queries are answered from the cache.

"""
import logging
from abc import ABC, abstractmethod

from ..semantics.enumeration import ClassSpec, enumerate_class
from ..semantics.structure import realized_literals
from .condition import Condition
from .errors import OracleFailure

LOGGER = logging.getLogger(__name__)


class Oracle(ABC):
    """Base of membership oracles over a deterministic candidate stream.

    Parameters
    ----------
    signature : :obj:`genmodel.logic.signature.Signature`
    bound : int, optional
        Maximal number of candidates to inspect; None for no bound.

    """
    def __init__(self, signature, bound=None):
        self.signature = signature
        self.bound = bound
        self._stream = None
        self._pending = None
        self._scanned = 0
        self._exhausted = False
        self._members = []
        self._diagrams = []
        self._answers = {}

    @abstractmethod
    def candidates(self):
        """Deterministic iterator over candidate structures."""

    @abstractmethod
    def accepts(self, structure):
        """Whether a candidate structure is a member of the class."""

    def _advance(self):
        """Inspect one more candidate; return False once no candidate is left."""
        if self._exhausted:
            return False
        if self._stream is None:
            self._stream = iter(self.candidates())
        if self._pending is None:
            try:
                self._pending = next(self._stream)
            except StopIteration:
                self._exhausted = True
                LOGGER.debug('Class exhausted after %d candidate(s), %d member(s).', self._scanned, len(self._members))
                return False
        if self.bound is not None and self._scanned >= self.bound:
            raise OracleFailure(f'Search bound of {self.bound} candidate structures exceeded.')
        structure, self._pending = self._pending, None
        self._scanned += 1
        if self.accepts(structure):
            self._members.append(structure)
            self._diagrams.append(realized_literals(structure).members)
        return True

    def members(self):
        """Yield the members of the class in canonical order.

        Raises
        ------
        :obj:`OracleFailure`
            If the search bound is exceeded before the stream ends.

        """
        index = 0
        while True:
            while index >= len(self._members):
                if not self._advance():
                    return
            yield self._members[index]
            index += 1

    def _search(self, members):
        index = 0
        while True:
            while index >= len(self._members):
                if not self._advance():
                    return None
            if members <= self._diagrams[index]:
                return index
            index += 1

    def witness_index(self, condition):
        """Position of the canonically least member realizing every literal of `condition`, or None."""
        members = condition.members if isinstance(condition, Condition) else frozenset(condition)
        if members not in self._answers:
            self._answers[members] = self._search(members)
        return self._answers[members]

    def witness(self, condition):
        """The canonically least member realizing `condition`, or None."""
        index = self.witness_index(condition)
        return None if index is None else self._members[index]

    def witness_id(self, condition):
        """Identifier of the witness of `condition`, as printed in traces, or None."""
        index = self.witness_index(condition)
        return None if index is None else f'm{index}'

    def diagram(self, index):
        """Atomic diagram of the member at `index`, as a frozenset of literals."""
        return self._diagrams[index]

    def is_condition(self, condition):
        """Whether some member realizes every literal of `condition`."""
        return self.witness_index(condition) is not None


class ClassOracle(Oracle):
    """Oracle for the members of a :obj:`genmodel.semantics.enumeration.ClassSpec`."""
    def __init__(self, spec, bound=None):
        super().__init__(spec.signature, bound)
        self.spec = spec

    def candidates(self):
        return enumerate_class(self.spec)

    def accepts(self, structure):
        return True


class PredicateOracle(Oracle):
    """Oracle for a custom membership predicate over the structures of a class, with a search bound.

    Parameters
    ----------
    spec : :obj:`genmodel.semantics.enumeration.ClassSpec`
        Class supplying the candidate structures.
    predicate : callable
        Decides membership of a candidate structure.
    bound : int
        Maximal number of candidates to inspect.

    """
    def __init__(self, spec, predicate, bound):
        super().__init__(spec.signature, bound)
        self.spec = spec
        self.predicate = predicate

    def candidates(self):
        return enumerate_class(self.spec)

    def accepts(self, structure):
        return bool(self.predicate(structure))


def as_oracle(oracle):
    """Wrap a :obj:`ClassSpec` into a :obj:`ClassOracle`; pass oracles through."""
    if isinstance(oracle, Oracle):
        return oracle
    if isinstance(oracle, ClassSpec):
        return ClassOracle(oracle)
    raise TypeError(f"Expected an Oracle or a ClassSpec, got '{type(oracle).__name__}'.")


def is_condition(condition, oracle):
    """Whether `condition` belongs to the forcing of the class behind `oracle`.

    Parameters
    ----------
    condition : :obj:`genmodel.forcing.condition.Condition`
    oracle : :obj:`Oracle` or :obj:`genmodel.semantics.enumeration.ClassSpec`

    Returns
    -------
    bool
        True iff some member of the class realizes every literal of `condition`.

    Raises
    ------
    :obj:`OracleFailure`
        If a bounded oracle cannot decide within its bound.

    """
    return as_oracle(oracle).is_condition(condition)
