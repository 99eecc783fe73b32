"""The term model of a maximal set of literals: constants modulo the equalities of the set."""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from ..logic.formula import Const, Atom, Eq, Literal
from ..logic.parser import render_literal
from ..semantics.structure import MultiStructure, atomic_sentences
from .errors import IllFormed, NotMaximal

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Defect:
    """One failure of well-definedness.

    Attributes
    ----------
    law : str
        One of 'reflexivity', 'symmetry', 'transitivity', 'congruence', 'class' or 'relation'.
    detail : str

    """
    law: str
    detail: str

    def __str__(self):
        return f'{self.law}: {self.detail}'


@dataclass(frozen=True)
class WelldefinedReport:
    """Outcome of :func:`verify_welldefined`; `ok` iff no defect was found."""
    defects: tuple = ()

    @property
    def ok(self):
        """Whether the term model is well defined."""
        return not self.defects

    def render(self):
        """One line per defect, or a single OK line."""
        if self.ok:
            return 'well-defined: OK'
        return '\n'.join(f'well-defined: FAIL {defect}' for defect in self.defects)


@dataclass(frozen=True)
class TermModel:
    """Constant classes per sort and relations read off a set of literals.

    Attributes
    ----------
    signature : :obj:`genmodel.logic.signature.Signature`
    classes : tuple of (str, tuple of tuple of str)
        Per sort, its constant classes, each in declaration order, ordered by their least constant.
    extensions : tuple of (str, frozenset)
        Per relation, tuples of class representatives.

    """
    signature: object
    classes: tuple
    extensions: tuple

    def domain(self, sort):
        """Classes of `sort`."""
        return dict(self.classes)[sort]

    def representative(self, constant):
        """Least constant of the class of `constant`."""
        for block in self.domain(self.signature.sort_of(constant)):
            if constant in block:
                return block[0]
        raise KeyError(constant)

    def extension(self, relation):
        """Tuples of class representatives in `relation`."""
        return dict(self.extensions)[relation]

    def sizes(self):
        """Per sort, in sort order, the number of classes."""
        return tuple(len(blocks) for _, blocks in self.classes)

    def as_structure(self):
        """The term model as a structure whose element ids are the class representatives."""
        return self.structure

    @cached_property
    def structure(self):
        """The term model as a structure, built once."""
        return MultiStructure(
            signature=self.signature,
            domains=tuple((sort, tuple(block[0] for block in blocks)) for sort, blocks in self.classes),
            interpretation=tuple((name, self.representative(name)) for name in self.signature.all_constants()),
            extensions=self.extensions,
        )

    def render(self):
        """Per sort its classes, then per relation its extension over class representatives."""
        result = []
        for sort, blocks in self.classes:
            result.append(f"{sort}: {' '.join('[' + ', '.join(block) + ']' for block in blocks)}")
        for name, rows in self.extensions:
            rendered = sorted('(' + ', '.join(row) + ')' for row in rows)
            result.append(f"{name}: {{{', '.join(rendered)}}}")
        return '\n'.join(result)


def _members(sigma):
    return getattr(sigma, 'condition', sigma).members


def _equal(members, sort, left, right):
    return Literal(Eq(Const(left, sort), Const(right, sort))) in members


def _strict_classes(sig, members, sort):
    blocks = {}
    for name in sig.constants_of(sort):
        block = tuple(other for other in sig.constants_of(sort) if _equal(members, sort, name, other))
        blocks.setdefault(block, None)
    return tuple(blocks)


def _closure_classes(sig, members, sort):
    """Classes of the equivalence generated by the positive equalities of `sort`."""
    parent = {name: name for name in sig.constants_of(sort)}

    def find(name):
        while parent[name] != name:
            name = parent[name]
        return name

    for left, right in product(sig.constants_of(sort), repeat=2):
        if _equal(members, sort, left, right):
            roots = sorted((find(left), find(right)), key=sig.constant_index)
            parent[roots[1]] = roots[0]
    blocks = {}
    for name in sig.constants_of(sort):
        blocks.setdefault(find(name), []).append(name)
    return tuple(sorted((tuple(block) for block in blocks.values()), key=lambda block: sig.constant_index(block[0])))


def equality_defects(sig, members):
    """Failures of reflexivity, symmetry and transitivity of the equality literals, in canonical order."""
    defects = []
    for sort in sig.sorts:
        names = sig.constants_of(sort)
        for left in names:
            if not _equal(members, sort, left, left):
                defects.append(Defect('reflexivity', f'({left} = {left}) missing'))
        for left, right in product(names, repeat=2):
            if _equal(members, sort, left, right) and not _equal(members, sort, right, left):
                defects.append(Defect('symmetry', f'({left} = {right}) without ({right} = {left})'))
        for left, middle, right in product(names, repeat=3):
            if (_equal(members, sort, left, middle) and _equal(members, sort, middle, right)
                    and not _equal(members, sort, left, right)):
                defects.append(Defect(
                    'transitivity', f'({left} = {middle}) and ({middle} = {right}) without ({left} = {right})'))
    return defects


def congruence_defects(sig, members):
    """Pairs of componentwise equal tuples on which a relation literal differs."""
    defects = []
    for relation in sig.relations:
        rows = list(product(*(sig.constants_of(sort) for sort in relation.sorts)))
        for left, right in product(rows, repeat=2):
            if left == right or not all(
                    _equal(members, sort, first, second) for sort, first, second in zip(relation.sorts, left, right)):
                continue
            first = Literal(Atom(relation.name, tuple(Const(name, sort) for name, sort in zip(left, relation.sorts))))
            second = Literal(Atom(relation.name, tuple(Const(name, sort) for name, sort in zip(right, relation.sorts))))
            if (first in members) != (second in members):
                defects.append(Defect(
                    'congruence', f'{render_literal(first)} and {render_literal(second)} disagree on equal arguments'))
    return defects


def build_term_model(sigma, sig=None, strict=True):
    """Build the term model of `sigma`.

    Parameters
    ----------
    sigma : :obj:`genmodel.forcing.construction.SigmaSet` or :obj:`genmodel.forcing.condition.Condition`
        Maximal set of literals.
    sig : :obj:`genmodel.logic.signature.Signature`, optional
        Defaults to the signature of `sigma`.
    strict : bool
        Reject sets leaving an atom undecided or violating the equality laws. Without it, classes are those of the
        equivalence generated by the positive equalities and undecided relation atoms read as false.

    Returns
    -------
    :obj:`TermModel`

    Raises
    ------
    :obj:`genmodel.termmodel.errors.NotMaximal`
        If strict and an atomic sentence is undecided.
    :obj:`genmodel.termmodel.errors.IllFormed`
        If strict and the equality literals fail the laws of an equivalence or of congruence.

    """
    sig = sig or sigma.signature
    members = _members(sigma)
    if strict:
        for atom in atomic_sentences(sig):
            if Literal(atom) not in members and Literal(atom, False) not in members:
                raise NotMaximal(atom)
        defects = equality_defects(sig, members) + congruence_defects(sig, members)
        if defects:
            raise IllFormed(defects)
    classes = tuple(
        (sort, (_strict_classes if strict else _closure_classes)(sig, members, sort)) for sort in sig.sorts
    )
    leader = {name: block[0] for _, blocks in classes for block in blocks for name in block}
    extensions = []
    for relation in sig.relations:
        rows = set()
        for literal in members:
            if literal.positive and isinstance(literal.atom, Atom) and literal.atom.relation == relation.name:
                rows.add(tuple(leader[arg.name] for arg in literal.atom.args))
        extensions.append((relation.name, frozenset(rows)))
    model = TermModel(sig, classes, tuple(extensions))
    LOGGER.debug('Term model with domain sizes %s.', model.sizes())
    return model


def verify_welldefined(model, sigma):
    """Check the equality laws and congruence on `sigma`, and that `model` reads its classes and relations off it.

    Returns
    -------
    :obj:`WelldefinedReport`

    """
    sig = model.signature
    members = _members(sigma)
    defects = equality_defects(sig, members) + congruence_defects(sig, members)
    for sort, blocks in model.classes:
        for block in blocks:
            for name in block:
                expected = tuple(other for other in sig.constants_of(sort) if _equal(members, sort, name, other))
                if expected != block:
                    defects.append(Defect('class', f"[{name}] is {{{', '.join(block)}}}, equalities give "
                                                   f"{{{', '.join(expected)}}}"))
    for relation in sig.relations:
        rows = model.extension(relation.name)
        for row in product(*(sig.constants_of(sort) for sort in relation.sorts)):
            literal = Literal(Atom(relation.name, tuple(Const(name, sort) for name, sort in zip(row, relation.sorts))))
            image = tuple(model.representative(name) for name in row)
            if (literal in members) != (image in rows):
                defects.append(Defect('relation', f'{render_literal(literal)} disagrees with the term model'))
    if defects:
        LOGGER.warning('Term model not well defined: %d defect(s).', len(defects))
    return WelldefinedReport(tuple(defects))
