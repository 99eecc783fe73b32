"""Textual DSL for formulae and literal sets.

Grammar (whitespace insignificant)::

    formula := 'Exists' ident ':' ident '.' formula
             | 'Forall' ident ':' ident '.' formula
             | 'And' '[' formula (';' formula)* ']'
             | 'Or' '[' formula (';' formula)* ']'
             | '!' formula
             | '(' formula ')'
             | ident '=' ident
             | ident '(' ident (',' ident)* ')'
    literals := '{' [formula (',' formula)*] '}'

"""
import logging

import pyparsing as pp

from .errors import FormulaSyntaxError, UnknownSymbol, SortError
from .formula import (
    Const, Var, Atom, Eq, Not, And, Or, Exists, Forall, BigAnd, BigOr, Literal, well_sorted_check,
)

LOGGER = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()


class _Raw:
    """Unresolved parse node; symbols are resolved against a signature afterwards."""
    # pylint: disable=too-few-public-methods
    def __init__(self, kind, *items):
        self.kind = kind
        self.items = items


def _grammar():
    keyword = pp.Keyword('And') | pp.Keyword('Or') | pp.Keyword('Exists') | pp.Keyword('Forall')
    ident = ~keyword + pp.Regex(r'[A-Za-z_][A-Za-z0-9_]*')
    formula = pp.Forward()

    def listed(element, separator):
        return element + pp.ZeroOrMore(pp.Suppress(separator) + element)

    quantifier = (
        (pp.Keyword('Exists') | pp.Keyword('Forall'))
        + ident + pp.Suppress(':') + ident + pp.Suppress('.') + formula
    ).set_parse_action(lambda toks: _Raw('quant', *toks))
    junction = (
        (pp.Keyword('And') | pp.Keyword('Or')) + pp.Suppress('[') + listed(formula, ';') + pp.Suppress(']')
    ).set_parse_action(lambda toks: _Raw(toks[0].lower(), *toks[1:]))
    negation = (pp.Suppress('!') + formula).set_parse_action(lambda toks: _Raw('not', toks[0]))
    group = pp.Suppress('(') + formula + pp.Suppress(')')
    equality = (ident + pp.Suppress('=') + ident).set_parse_action(lambda toks: _Raw('eq', *toks))
    atom = (
        ident + pp.Suppress('(') + listed(ident, ',') + pp.Suppress(')')
    ).set_parse_action(lambda toks: _Raw('atom', toks[0], *toks[1:]))

    formula <<= quantifier | junction | negation | group | equality | atom
    literals = (
        pp.Suppress('{') + pp.Optional(listed(formula, ',')) + pp.Suppress('}')
    ).set_parse_action(lambda toks: _Raw('set', *toks))
    return formula, literals


FORMULA, LITERAL_SET = _grammar()


def _parse(element, text):
    try:
        return element.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as err:
        raise FormulaSyntaxError(f'Cannot parse {text!r}: {err.msg}', err.loc) from err


def _resolve(raw, sig, scope):
    """Turn a raw parse node into an AST, resolving names against `sig` and the bound variables in `scope`."""
    def term(name):
        if name in scope:
            return Var(name, scope[name])
        sort = sig.sort_of(name)
        if sort is None:
            raise UnknownSymbol(name)
        return Const(name, sort)

    kind, items = raw.kind, raw.items
    if kind == 'eq':
        return Eq(term(items[0]), term(items[1]))
    if kind == 'atom':
        if sig.relation(items[0]) is None:
            raise UnknownSymbol(items[0])
        return Atom(items[0], tuple(term(name) for name in items[1:]))
    if kind == 'not':
        return Not(_resolve(items[0], sig, scope))
    if kind in ('and', 'or'):
        parts = tuple(_resolve(item, sig, scope) for item in items)
        return And(parts) if kind == 'and' else Or(parts)
    if kind == 'quant':
        quantifier, var, sort, body = items
        if not sig.has_sort(sort):
            raise UnknownSymbol(sort)
        node = Exists if quantifier == 'Exists' else Forall
        return node(var, sort, _resolve(body, sig, {**scope, var: sort}))
    raise FormulaSyntaxError(f'Unexpected node {kind!r}')


def parse_formula(text, sig, free=None):
    """Parse a DSL string into a well-sorted formula over `sig`.

    Parameters
    ----------
    text : str
        The formula in DSL syntax.
    sig : :obj:`genmodel.logic.signature.Signature`
        Signature to resolve symbols against.
    free : dict, optional
        Free variables allowed in `text`, mapped to their sorts.

    Returns
    -------
    object
        The formula AST.

    Raises
    ------
    :obj:`FormulaSyntaxError`
        If `text` does not conform to the grammar.
    :obj:`UnknownSymbol`
        If a name is neither a declared symbol nor a bound or free variable.
    :obj:`SortError`
        If sorts mismatch.

    """
    free = dict(free or {})
    for sort in free.values():
        if not sig.has_sort(sort):
            raise UnknownSymbol(sort)
    formula = _resolve(_parse(FORMULA, text), sig, free)
    well_sorted_check(sig, formula).raise_for_violations()
    return formula


def parse_literal(text, sig):
    """Parse a single literal, i.e. an atomic or negated atomic sentence."""
    literal = Literal.from_formula(parse_formula(text, sig))
    if literal is None:
        raise SortError(text, 'not a literal')
    return literal


def parse_literals(text, sig):
    """Parse a brace-enclosed, comma-separated set of literals, e.g. ``{P(c0), !(c0 = c1)}``.

    Returns
    -------
    tuple of :obj:`genmodel.logic.formula.Literal`
        Literals in input order.

    """
    raw = _parse(LITERAL_SET, text)
    result = []
    for item in raw.items:
        formula = _resolve(item, sig, {})
        well_sorted_check(sig, formula).raise_for_violations()
        literal = Literal.from_formula(formula)
        if literal is None:
            raise SortError(formula, 'not a literal')
        result.append(literal)
    return tuple(result)


def render_formula(formula):
    """Render a formula in DSL syntax; :func:`parse_formula` reads the output back to an equal AST.

    Countable families have no DSL form and render as ``And<label>``/``Or<label>``.

    """
    if isinstance(formula, (Const, Var)):
        return formula.name
    if isinstance(formula, Atom):
        return f"{formula.relation}({', '.join(render_formula(arg) for arg in formula.args)})"
    if isinstance(formula, Eq):
        return f'({render_formula(formula.left)} = {render_formula(formula.right)})'
    if isinstance(formula, Not):
        return '!' + render_formula(formula.body)
    if isinstance(formula, (And, Or)):
        return f"{type(formula).__name__}[{'; '.join(render_formula(part) for part in formula.parts)}]"
    if isinstance(formula, (Exists, Forall)):
        return f'{type(formula).__name__} {formula.var}:{formula.sort} . {render_formula(formula.body)}'
    if isinstance(formula, (BigAnd, BigOr)):
        return f"{'And' if isinstance(formula, BigAnd) else 'Or'}<{formula.label}>"
    raise TypeError(f'Cannot render {formula!r}')


def render_literal(literal):
    """Render a literal in DSL syntax."""
    return render_formula(literal.as_formula())
