"""A ⋁⋀ sentence true in every member of a class whose disjuncts are refuted one by one along a construction.

Over constants c_0..c_2k and a unary P, the class holds the structures where P holds of some constant, and disjunct j
says that P holds of no constant past c_j. Every member satisfies one disjunct, yet meeting the dense set D_j of
conditions holding some P(c_m), m > j, refutes disjunct j after finitely many stages.

"""
import logging
from dataclasses import dataclass

from ..forcing.condition import Condition
from ..forcing.construction import Schedule, run_construction
from ..forcing.dense import DenseSpec
from ..forcing.oracle import ClassOracle
from ..logic.formula import Const, Atom, Eq, Not, And, Or, Literal
from ..logic.parser import render_formula, render_literal
from ..logic.signature import Signature
from ..semantics.enumeration import ClassSpec, enumerate_class
from ..semantics.structure import evaluate

LOGGER = logging.getLogger(__name__)


def oror_signature(k):
    """One sort `s` with constants c0..c{2k} and a unary relation P."""
    return Signature.create(('s',), {'s': [f'c{index}' for index in range(2 * k + 1)]}, {'P': ('s',)})


def oror_disjunct(k, j):
    """P holds of no constant past c_j; the last disjunct is vacuous."""
    last = 2 * k
    if j == last:
        return Eq(Const(f'c{last}', 's'), Const(f'c{last}', 's'))
    return And(tuple(Not(Atom('P', (Const(f'c{m}', 's'),))) for m in range(j + 1, last + 1)))


@dataclass(frozen=True)
class Refutation:
    """Disjunct `j` refuted by `literal`, added at trace step `step`; `stage` counts steps from one."""
    j: int
    step: int
    literal: Literal

    @property
    def stage(self):
        """The stage of the construction at which the disjunct is refuted."""
        return self.step + 1


@dataclass(frozen=True)
class CounterexampleReport:
    """Outcome of :func:`refute_oror`."""
    k: int
    signature: Signature
    sentence: object
    members: int
    satisfied: int
    trace: object
    refutations: tuple
    open_disjuncts: tuple

    @property
    def ok(self):
        """Whether every member satisfies the sentence and every scheduled disjunct was refuted in time."""
        return (self.satisfied == self.members and len(self.refutations) == self.k
                and all(refutation.stage <= refutation.j + 1 for refutation in self.refutations))

    def render(self):
        """Structured text with the sections CLASS, SENTENCE, PER-MEMBER CHECK and TRACE REFUTATIONS."""
        last = 2 * self.k
        lines = [
            'CLASS',
            f'  sort s, constants c0..c{last}, relation P(s)',
            f'  members: P holds of a nonempty set of constants ({self.members} enumerated)',
            'SENTENCE',
            f'  {render_formula(self.sentence)}',
        ]
        lines.extend(f'  disjunct {j}: {render_formula(part)}' for j, part in enumerate(self.sentence.parts))
        lines.extend([
            'PER-MEMBER CHECK',
            f"  {self.satisfied}/{self.members} members satisfy the sentence: "
            f"{'OK' if self.satisfied == self.members else 'FAIL'}",
            'TRACE REFUTATIONS',
        ])
        lines.extend(f'  {step.render()}' for step in self.trace.steps)
        lines.extend(
            f'  disjunct {refutation.j} refuted at stage {refutation.stage} by {render_literal(refutation.literal)}'
            for refutation in self.refutations
        )
        if self.open_disjuncts:
            lines.append(f"  disjuncts {', '.join(str(j) for j in self.open_disjuncts)} not refuted by any stage")
        lines.append(f"RESULT: {'OK' if self.ok else 'FAIL'}")
        return '\n'.join(lines)


def refute_oror(k):
    """Run the ⋁⋀ counterexample with `k` refutation stages.

    Parameters
    ----------
    k : int
        Number of dense sets D_0..D_{k-1} scheduled; at least 1.

    Returns
    -------
    :obj:`CounterexampleReport`

    """
    if k < 1:
        raise ValueError('The stage budget must be at least 1.')
    sig = oror_signature(k)
    last = 2 * k
    constants = [Const(f'c{index}', 's') for index in range(last + 1)]
    spec = ClassSpec(sig, discrete=('s',), constraint=Or(tuple(Atom('P', (const,)) for const in constants)))
    sentence = Or(tuple(oror_disjunct(k, j) for j in range(last + 1)))

    members = satisfied = 0
    for structure in enumerate_class(spec):
        members += 1
        satisfied += evaluate(structure, sentence)
    LOGGER.info('%d of %d members satisfy the sentence.', satisfied, members)

    schedule = Schedule(tuple(
        DenseSpec.hit_disjunct(sig, [Literal(Atom('P', (const,))) for const in constants[j + 1:]], f'D_{j}')
        for j in range(k)
    ))
    sigma, trace = run_construction(Condition(sig), schedule, ClassOracle(spec))

    refutations, open_disjuncts = [], []
    for j in range(last + 1):
        refuting = [
            (trace.step_adding(Literal(Atom('P', (const,)))), Literal(Atom('P', (const,))))
            for const in constants[j + 1:] if Literal(Atom('P', (const,))) in sigma
        ]
        if refuting:
            step, literal = min(refuting, key=lambda item: item[0])
            refutations.append(Refutation(j, step, literal))
        else:
            open_disjuncts.append(j)
    return CounterexampleReport(
        k=k,
        signature=sig,
        sentence=sentence,
        members=members,
        satisfied=satisfied,
        trace=trace,
        refutations=tuple(refutations),
        open_disjuncts=tuple(open_disjuncts),
    )
