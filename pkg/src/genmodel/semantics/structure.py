"""Finite multi-sorted structures, Tarskian evaluation and the atomic diagram Σ_ν of a structure.

Structure literal format, one entry per line or separated by ';'::

    s: {e1, e2}          domain of sort s
    c -> e1              interpretation of constant c
    R: {(e1, e2), ...}   extension of relation R

Relations left out of a literal are read as empty, and flagged on the structure.

"""
import logging
from dataclasses import dataclass, field
from itertools import product

import pyparsing as pp

from ..logic.formula import (
    Const, Var, Atom, Eq, Not, And, Or, Exists, Forall, BigAnd, BigOr, Literal, iter_conjuncts, literal_key,
)
from .errors import StructureError, UnsupportedFormula

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiStructure:
    """A finite structure for a multi-sorted signature whose constants name every element of their sort.

    Sort domains may overlap as sets of element ids; nothing relates distinct sorts.

    Attributes
    ----------
    signature : :obj:`genmodel.logic.signature.Signature`
    domains : tuple of (str, tuple of str)
        Per sort, in sort order, its element ids.
    interpretation : tuple of (str, str)
        Per constant, in canonical order, the element it names.
    extensions : tuple of (str, frozenset)
        Per relation, in declaration order, its set of element tuples.
    defaulted : tuple of str
        Relations whose interpretation was omitted and read as empty.

    """
    signature: object
    domains: tuple
    interpretation: tuple
    extensions: tuple
    defaulted: tuple = field(default=(), compare=False)

    def __post_init__(self):
        sig = self.signature
        domains = dict(self.domains)
        if tuple(domains) != sig.sorts:
            raise StructureError('Domains must be given for every sort, in sort order.')
        values = dict(self.interpretation)
        if tuple(values) != sig.all_constants():
            raise StructureError('Every constant must be interpreted, in canonical order.')
        for sort in sig.sorts:
            domain = domains[sort]
            if len(set(domain)) != len(domain):
                raise StructureError(f"Domain of sort '{sort}' repeats elements.")
            named = {values[name] for name in sig.constants_of(sort)}
            if not named <= set(domain):
                raise StructureError(f"Constants of sort '{sort}' name elements outside its domain.")
            if named != set(domain):
                raise StructureError(f"Constants of sort '{sort}' do not name every element of its domain.")
        extensions = dict(self.extensions)
        if tuple(extensions) != tuple(relation.name for relation in sig.relations):
            raise StructureError('Every relation must be interpreted, in declaration order.')
        for relation in sig.relations:
            for row in extensions[relation.name]:
                if len(row) != relation.arity or not all(
                        element in domains[sort] for element, sort in zip(row, relation.sorts)):
                    raise StructureError(f"Tuple {row} of '{relation.name}' does not respect its sort type.")

    @classmethod
    def create(cls, sig, domains, constants, relations=None):
        """Build a structure from plain containers.

        Parameters
        ----------
        sig : :obj:`genmodel.logic.signature.Signature`
        domains : dict
            Sort to iterable of element ids.
        constants : dict
            Constant name to element id.
        relations : dict, optional
            Relation name to iterable of element tuples. Omitted relations are read as empty and flagged.

        """
        relations = dict(relations or {})
        unknown = [name for name in relations if sig.relation(name) is None]
        if unknown:
            raise StructureError(f"Unknown relation(s): {', '.join(unknown)}")
        defaulted = tuple(relation.name for relation in sig.relations if relation.name not in relations)
        if defaulted:
            LOGGER.warning('Relation(s) %s not interpreted; reading them as empty.', ', '.join(defaulted))
        try:
            return cls(
                signature=sig,
                domains=tuple((sort, tuple(domains[sort])) for sort in sig.sorts),
                interpretation=tuple((name, constants[name]) for name in sig.all_constants()),
                extensions=tuple(
                    (relation.name, frozenset(tuple(row) for row in relations.get(relation.name, ())))
                    for relation in sig.relations
                ),
                defaulted=defaulted,
            )
        except KeyError as err:
            raise StructureError(f'Missing interpretation of {err.args[0]!r}.') from err

    def domain(self, sort):
        """Element ids of `sort`."""
        return dict(self.domains)[sort]

    def value(self, constant):
        """Element named by `constant`."""
        return dict(self.interpretation)[constant]

    def extension(self, relation):
        """Set of element tuples of `relation`."""
        return dict(self.extensions)[relation]

    def sizes(self):
        """Per sort, in sort order, the size of its domain."""
        return tuple(len(domain) for _, domain in self.domains)


def evaluate(structure, formula, env=None):
    """Tarskian truth of `formula` in `structure`, quantifiers bounded to the domain of their sort.

    Parameters
    ----------
    structure : :obj:`MultiStructure`
    formula : object
        Well-sorted formula with finite index families.
    env : dict, optional
        Assignment of free variable names to element ids.

    Returns
    -------
    bool

    Raises
    ------
    :obj:`UnsupportedFormula`
        If `formula` contains a countably-indexed family.

    """
    env = env or {}
    values = dict(structure.interpretation)

    def term(arg):
        if isinstance(arg, Const):
            return values[arg.name]
        if isinstance(arg, Var):
            return env[arg.name]
        raise TypeError(f'Not a term: {arg!r}')

    if isinstance(formula, Atom):
        return tuple(term(arg) for arg in formula.args) in structure.extension(formula.relation)
    if isinstance(formula, Eq):
        return term(formula.left) == term(formula.right)
    if isinstance(formula, Not):
        return not evaluate(structure, formula.body, env)
    if isinstance(formula, And):
        return all(evaluate(structure, part, env) for part in formula.parts)
    if isinstance(formula, Or):
        return any(evaluate(structure, part, env) for part in formula.parts)
    if isinstance(formula, Exists):
        return any(evaluate(structure, formula.body, {**env, formula.var: element})
                   for element in structure.domain(formula.sort))
    if isinstance(formula, Forall):
        return all(evaluate(structure, formula.body, {**env, formula.var: element})
                   for element in structure.domain(formula.sort))
    if isinstance(formula, (BigAnd, BigOr)):
        raise UnsupportedFormula(formula)
    raise TypeError(f'Not a formula: {formula!r}')


def atomic_sentences(sig):
    """Yield every well-sorted atomic sentence of `sig` in canonical order.

    Their number is the sum of |K_s|^2 over sorts plus, per relation, the product of |K_s| over its argument sorts.

    """
    for sort in sig.sorts:
        consts = [Const(name, sort) for name in sig.constants_of(sort)]
        for left, right in product(consts, repeat=2):
            yield Eq(left, right)
    for relation in sig.relations:
        columns = [[Const(name, sort) for name in sig.constants_of(sort)] for sort in relation.sorts]
        for args in product(*columns):
            yield Atom(relation.name, args)


@dataclass(frozen=True)
class SigmaNu:
    """The atomic fragment of the sentences realized by a structure: for every atomic sentence, exactly one of it and
    its negation, in canonical order.
    """
    signature: object
    literals: tuple
    _members: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, '_members', frozenset(self.literals))

    def __contains__(self, literal):
        return literal in self._members

    def __iter__(self):
        return iter(self.literals)

    def __len__(self):
        return len(self.literals)

    @property
    def members(self):
        """The literals as a frozenset."""
        return self._members


def realized_literals(structure):
    """Σ_ν of `structure`, restricted to literals.

    Returns
    -------
    :obj:`SigmaNu`
        Contains φ for every atomic sentence φ true in `structure` and ¬φ for every other one.

    """
    sig = structure.signature
    literals = [Literal(atom, evaluate(structure, atom)) for atom in atomic_sentences(sig)]
    return SigmaNu(sig, tuple(sorted(literals, key=lambda literal: literal_key(sig, literal))))


def holds_by_literals(literals, formula, limit=None):
    """Evaluate a literal or ⋀⋁ sentence by literal containment: every conjunct has a disjunct in `literals`."""
    members = literals if isinstance(literals, (set, frozenset, SigmaNu)) else frozenset(literals)
    return all(any(literal in members for literal in clause) for clause in iter_conjuncts(formula, limit))


def _literal_grammar():
    ident = pp.Regex(r'[A-Za-z_][A-Za-z0-9_]*')
    row = pp.Group(pp.Suppress('(') + ident + pp.ZeroOrMore(pp.Suppress(',') + ident) + pp.Suppress(')'))
    item = row | ident
    members = pp.Group(pp.Suppress('{') + pp.Optional(item + pp.ZeroOrMore(pp.Suppress(',') + item)) + pp.Suppress('}'))
    assignment = pp.Group(ident + pp.Literal('->') + ident)
    extension = pp.Group(ident + pp.Literal(':') + members)
    entry = assignment | extension
    return pp.Optional(entry + pp.ZeroOrMore(pp.Suppress(pp.Optional(';')) + entry)) + pp.Suppress(pp.Optional(';'))


STRUCTURE_LITERAL = _literal_grammar()


def parse_structure(text, sig):
    """Read a structure literal over `sig`.

    Raises
    ------
    :obj:`StructureError`
        On syntax errors, unknown names, or if the resulting structure violates its invariants.

    """
    try:
        entries = STRUCTURE_LITERAL.parse_string(text, parse_all=True)
    except pp.ParseBaseException as err:
        raise StructureError(f'Cannot parse structure literal at position {err.loc}: {err.msg}') from err
    domains, constants, relations = {}, {}, {}
    for name, operator, value in entries:
        if operator == '->':
            if sig.sort_of(name) is None:
                raise StructureError(f"Unknown constant '{name}'.")
            constants[name] = value
        elif sig.has_sort(name):
            domains[name] = [item for item in value if isinstance(item, str)]
            if len(domains[name]) != len(value):
                raise StructureError(f"Domain of sort '{name}' must list bare element ids.")
        elif sig.relation(name) is not None:
            relations[name] = [(item,) if isinstance(item, str) else tuple(item) for item in value]
        else:
            raise StructureError(f"Unknown sort or relation '{name}'.")
    return MultiStructure.create(sig, domains, constants, relations)


def render_structure(structure):
    """Render `structure` as a structure literal, one entry per line, in canonical order."""
    sig = structure.signature
    result = [f"{sort}: {{{', '.join(domain)}}}" for sort, domain in structure.domains]
    result.extend(f'{name} -> {element}' for name, element in structure.interpretation)
    for relation in sig.relations:
        position = [{element: index for index, element in enumerate(structure.domain(sort))}
                    for sort in relation.sorts]
        rows = sorted(structure.extension(relation.name),
                      key=lambda row: tuple(index[element] for index, element in zip(position, row)))
        result.append(f"{relation.name}: {{{', '.join('(' + ', '.join(row) + ')' for row in rows)}}}")
    return '\n'.join(result)
