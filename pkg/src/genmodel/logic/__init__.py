"""Multi-sorted signatures, the infinitary formula language, its DSL and the axioms of standard theories."""
from .errors import LogicError, SignatureError, FormulaSyntaxError, UnknownSymbol, SortError, NotAndOr, UnboundedFamily
from .signature import Signature, Relation
from .formula import (
    Const, Var, Atom, Eq, Not, And, Or, Exists, Forall, BigAnd, BigOr, Literal, FormKind, Axiom, Theory,
    WellSortedReport, normalize, classify, conjuncts, iter_conjuncts, free_variables, substitute,
    well_sorted_check, atom_key, literal_key, sort_literals,
)
from .parser import parse_formula, parse_literal, parse_literals, render_formula, render_literal
from .axioms import equality_axioms, qe_axioms

__all__ = [
    'LogicError', 'SignatureError', 'FormulaSyntaxError', 'UnknownSymbol', 'SortError', 'NotAndOr', 'UnboundedFamily',
    'Signature', 'Relation',
    'Const', 'Var', 'Atom', 'Eq', 'Not', 'And', 'Or', 'Exists', 'Forall', 'BigAnd', 'BigOr', 'Literal', 'FormKind',
    'Axiom', 'Theory', 'WellSortedReport', 'normalize', 'classify', 'conjuncts', 'iter_conjuncts', 'free_variables',
    'substitute', 'well_sorted_check', 'atom_key', 'literal_key', 'sort_literals',
    'parse_formula', 'parse_literal', 'parse_literals', 'render_formula', 'render_literal',
    'equality_axioms', 'qe_axioms',
]
