"""Infinitary formula AST with finite explicit index families, literals, theories and shape classification.

Countable index families are represented by :obj:`BigAnd`/:obj:`BigOr`, whose members are produced on demand by a
generator; they can be scheduled and certified, but never evaluated directly.

"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import islice

from .errors import NotAndOr, SortError, UnboundedFamily, UnknownSymbol


@dataclass(frozen=True)
class Const:
    """A constant symbol together with its sort."""
    name: str
    sort: str


@dataclass(frozen=True)
class Var:
    """A sorted variable."""
    name: str
    sort: str


@dataclass(frozen=True)
class Atom:
    """Relational atom R(t1, ..., tn)."""
    relation: str
    args: tuple


@dataclass(frozen=True)
class Eq:
    """Equality between two terms of the same sort."""
    left: object
    right: object


@dataclass(frozen=True)
class Not:
    """Negation."""
    body: object


@dataclass(frozen=True)
class And:
    """Conjunction over a finite, explicit, nonempty index list."""
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise ValueError('And requires a nonempty index list.')


@dataclass(frozen=True)
class Or:
    """Disjunction over a finite, explicit, nonempty index list."""
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise ValueError('Or requires a nonempty index list.')


@dataclass(frozen=True)
class Exists:
    """Existential quantification bounded to the domain of `sort`."""
    var: str
    sort: str
    body: object


@dataclass(frozen=True)
class Forall:
    """Universal quantification bounded to the domain of `sort`."""
    var: str
    sort: str
    body: object


@dataclass(frozen=True)
class BigAnd:
    """Conjunction over a countable family; `source()` returns an iterator over its members."""
    label: str
    source: object = field(compare=False, hash=False, repr=False)

    def take(self, count):
        """The first `count` members of the family."""
        return tuple(islice(self.source(), count))


@dataclass(frozen=True)
class BigOr:
    """Disjunction over a countable family; `source()` returns an iterator over its members."""
    label: str
    source: object = field(compare=False, hash=False, repr=False)

    def take(self, count):
        """The first `count` members of the family."""
        return tuple(islice(self.source(), count))


ATOMIC = (Atom, Eq)
TERMS = (Const, Var)


@dataclass(frozen=True)
class Literal:
    """An atomic sentence or its negation."""
    atom: object
    positive: bool = True

    def __post_init__(self):
        if not isinstance(self.atom, ATOMIC):
            raise TypeError(f'Literal atom must be atomic, got {self.atom!r}')

    def negate(self):
        """The literal of opposite polarity."""
        return Literal(self.atom, not self.positive)

    def as_formula(self):
        """The literal as a formula node."""
        return self.atom if self.positive else Not(self.atom)

    @classmethod
    def from_formula(cls, formula):
        """Read a literal off an atomic or negated atomic formula, or return None."""
        if isinstance(formula, ATOMIC):
            return cls(formula)
        if isinstance(formula, Not) and isinstance(formula.body, ATOMIC):
            return cls(formula.body, False)
        return None


class FormKind(Enum):
    """Syntactic shape of a sentence."""
    LITERAL = 'literal'
    AND_OR = 'and_or'
    OTHER = 'other'


def normalize(formula):
    """Collapse singleton And/Or nodes, recursively."""
    if isinstance(formula, (And, Or)):
        parts = tuple(normalize(part) for part in formula.parts)
        if len(parts) == 1:
            return parts[0]
        return type(formula)(parts)
    if isinstance(formula, Not):
        return Not(normalize(formula.body))
    if isinstance(formula, (Exists, Forall)):
        return type(formula)(formula.var, formula.sort, normalize(formula.body))
    return formula


def _literal_clause(formula):
    """Literals of a normalized disjunct-clause, or None if it is not one."""
    literal = Literal.from_formula(formula)
    if literal is not None:
        return (literal,)
    if isinstance(formula, Or):
        literals = tuple(Literal.from_formula(part) for part in formula.parts)
        if all(literal is not None for literal in literals):
            return literals
    return None


def classify(formula):
    """Classify the syntactic shape of `formula` after singleton collapse.

    Countable conjunctions classify as and_or; their members are checked when drawn by :func:`iter_conjuncts`.

    Returns
    -------
    :obj:`FormKind`

    """
    formula = normalize(formula)
    if Literal.from_formula(formula) is not None:
        return FormKind.LITERAL
    if isinstance(formula, BigAnd):
        return FormKind.AND_OR
    if _literal_clause(formula) is not None:
        return FormKind.AND_OR
    if isinstance(formula, And) and all(_literal_clause(part) is not None for part in formula.parts):
        return FormKind.AND_OR
    return FormKind.OTHER


def iter_conjuncts(formula, limit=None):
    """Yield the conjuncts of a literal or ⋀⋁ sentence, each as a tuple of candidate literals.

    Parameters
    ----------
    formula : object
        A sentence of shape literal or and_or.
    limit : int, optional
        Number of conjuncts to draw from a countable conjunction. Mandatory for :obj:`BigAnd`.

    Raises
    ------
    :obj:`NotAndOr`
        If `formula`, or a drawn member of a countable conjunction, is not of the required shape.
    :obj:`UnboundedFamily`
        If `formula` is a countable conjunction and `limit` is None.

    """
    formula = normalize(formula)
    if isinstance(formula, BigAnd):
        if limit is None:
            raise UnboundedFamily(formula.label)
        for member in formula.take(limit):
            clause = _literal_clause(normalize(member))
            if clause is None:
                raise NotAndOr(member)
            yield clause
        return
    clause = _literal_clause(formula)
    if clause is not None:
        yield clause
        return
    if isinstance(formula, And):
        clauses = [_literal_clause(part) for part in formula.parts]
        if all(clause is not None for clause in clauses):
            yield from clauses
            return
    raise NotAndOr(formula)


def conjuncts(formula, limit=None):
    """Tuple form of :func:`iter_conjuncts`."""
    return tuple(iter_conjuncts(formula, limit))


def free_variables(formula, bound=frozenset()):
    """Set of free :obj:`Var` occurrences of `formula`."""
    if isinstance(formula, Atom):
        return {arg for arg in formula.args if isinstance(arg, Var) and arg.name not in bound}
    if isinstance(formula, Eq):
        return {arg for arg in (formula.left, formula.right) if isinstance(arg, Var) and arg.name not in bound}
    if isinstance(formula, Not):
        return free_variables(formula.body, bound)
    if isinstance(formula, (And, Or)):
        return set().union(*(free_variables(part, bound) for part in formula.parts))
    if isinstance(formula, (Exists, Forall)):
        return free_variables(formula.body, bound | {formula.var})
    return set()


def substitute(formula, name, term):
    """Replace free occurrences of the variable `name` by `term`."""
    def swap(arg):
        return term if isinstance(arg, Var) and arg.name == name else arg

    if isinstance(formula, Atom):
        return Atom(formula.relation, tuple(swap(arg) for arg in formula.args))
    if isinstance(formula, Eq):
        return Eq(swap(formula.left), swap(formula.right))
    if isinstance(formula, Not):
        return Not(substitute(formula.body, name, term))
    if isinstance(formula, (And, Or)):
        return type(formula)(tuple(substitute(part, name, term) for part in formula.parts))
    if isinstance(formula, (Exists, Forall)):
        if formula.var == name:
            return formula
        return type(formula)(formula.var, formula.sort, substitute(formula.body, name, term))
    return formula


@dataclass(frozen=True)
class Violation:
    """One node failing the well-sortedness check."""
    node: object
    reason: str


@dataclass(frozen=True)
class WellSortedReport:
    """Outcome of :func:`well_sorted_check`; `ok` iff there are no violations."""
    violations: tuple = ()

    @property
    def ok(self):
        """Whether the formula is well-sorted."""
        return not self.violations

    def raise_for_violations(self):
        """Raise the first violation as :obj:`SortError` or :obj:`UnknownSymbol`."""
        for violation in self.violations:
            if violation.reason.startswith('unknown'):
                raise UnknownSymbol(violation.reason.split("'")[1])
            raise SortError(violation.node, violation.reason)


def well_sorted_check(sig, formula, closed=False):
    """Check that every Eq and Atom node of `formula` respects the sorts of `sig` and all symbols are declared.

    Parameters
    ----------
    sig : :obj:`genmodel.logic.signature.Signature`
        The signature to check against.
    formula : object
        Formula AST.
    closed : bool
        Whether free variables count as violations.

    Returns
    -------
    :obj:`WellSortedReport`

    """
    violations = []

    def term_sort(term, node, scope):
        if isinstance(term, Const):
            declared = sig.sort_of(term.name)
            if declared is None:
                violations.append(Violation(node, f"unknown constant '{term.name}'"))
                return None
            if declared != term.sort:
                violations.append(Violation(node, f"constant '{term.name}' is of sort '{declared}', not '{term.sort}'"))
            return declared
        if isinstance(term, Var):
            if term.name in scope and scope[term.name] != term.sort:
                violations.append(Violation(node, f"variable '{term.name}' is bound to sort '{scope[term.name]}'"))
            elif term.name not in scope and closed:
                violations.append(Violation(node, f"unknown variable '{term.name}'"))
            if not sig.has_sort(term.sort):
                violations.append(Violation(node, f"unknown sort '{term.sort}'"))
            return term.sort
        violations.append(Violation(node, f'not a term: {term!r}'))
        return None

    def visit(node, scope):
        if isinstance(node, Eq):
            left, right = term_sort(node.left, node, scope), term_sort(node.right, node, scope)
            if left is not None and right is not None and left != right:
                violations.append(Violation(node, f"equality between sorts '{left}' and '{right}'"))
        elif isinstance(node, Atom):
            relation = sig.relation(node.relation)
            if relation is None:
                violations.append(Violation(node, f"unknown relation '{node.relation}'"))
                return
            if len(node.args) != relation.arity:
                violations.append(Violation(node, f"'{node.relation}' takes {relation.arity} argument(s)"))
                return
            for position, (arg, expected) in enumerate(zip(node.args, relation.sorts)):
                actual = term_sort(arg, node, scope)
                if actual is not None and actual != expected:
                    violations.append(Violation(node, f"argument {position} is of sort '{actual}', not '{expected}'"))
        elif isinstance(node, Not):
            visit(node.body, scope)
        elif isinstance(node, (And, Or)):
            for part in node.parts:
                visit(part, scope)
        elif isinstance(node, (Exists, Forall)):
            if not sig.has_sort(node.sort):
                violations.append(Violation(node, f"unknown sort '{node.sort}'"))
            visit(node.body, {**scope, node.var: node.sort})
        elif not isinstance(node, (BigAnd, BigOr)):
            violations.append(Violation(node, f'not a formula: {node!r}'))

    visit(formula, {})
    return WellSortedReport(tuple(violations))


def atom_key(sig, atom):
    """Canonical sort key of an atomic sentence: equalities first, by sort, then relations in declaration order, each
    by the declaration order of their constants.
    """
    if isinstance(atom, Eq):
        return (0, sig.sort_index(atom.left.sort), (sig.constant_index(atom.left.name),
                                                    sig.constant_index(atom.right.name)))
    return (1, sig.relation_index(atom.relation), tuple(sig.constant_index(arg.name) for arg in atom.args))


def literal_key(sig, literal):
    """Canonical sort key of a literal; the positive literal precedes its negation."""
    return atom_key(sig, literal.atom) + (0 if literal.positive else 1,)


def sort_literals(sig, literals):
    """Literals in canonical order, without duplicates."""
    return tuple(sorted(set(literals), key=lambda literal: literal_key(sig, literal)))


@dataclass(frozen=True)
class Axiom:
    """One sentence of a theory.

    Attributes
    ----------
    sentence : object
        Closed formula.
    provenance : str
        One of 'equality', 'qe' or 'user'.
    label : str
        Short name, used as dense-set provenance in construction traces.
    expansion : object
        Quantifier-free ⋀⋁ form used for scheduling in place of a quantified sentence, or None.

    """
    sentence: object
    provenance: str
    label: str
    expansion: object = None

    def schedulable(self):
        """The sentence the scheduler meets: the expansion if present, else the sentence itself."""
        return self.sentence if self.expansion is None else self.expansion


@dataclass(frozen=True)
class Theory:
    """Ordered list of axioms."""
    axioms: tuple = ()

    def __iter__(self):
        return iter(self.axioms)

    def __len__(self):
        return len(self.axioms)

    def __add__(self, other):
        return Theory(self.axioms + tuple(other.axioms))

    def sentences(self):
        """The sentences of all axioms, in order."""
        return tuple(axiom.sentence for axiom in self.axioms)

    def with_provenance(self, provenance):
        """Sub-theory of axioms with the given provenance tag."""
        return Theory(tuple(axiom for axiom in self.axioms if axiom.provenance == provenance))

    def clauses(self):
        """All conjunct clauses of the schedulable ⋀⋁ axioms, as tuples of literals."""
        result = []
        for axiom in self.axioms:
            if classify(axiom.schedulable()) is not FormKind.OTHER:
                result.extend(conjuncts(axiom.schedulable()))
        return tuple(result)
