"""Test module for genmodel/logic/parser.py"""
import pytest
from hypothesis import given, strategies as st

from genmodel.logic.errors import FormulaSyntaxError, UnknownSymbol, SortError
from genmodel.logic.formula import Const, Var, Atom, Eq, Not, And, Or, Exists, Forall, Literal
from genmodel.logic.parser import parse_formula, parse_literal, parse_literals, render_formula, render_literal
from genmodel.logic.signature import Signature


@pytest.fixture(scope='module')
def signature():
    """Fixture two-sorted signature"""
    return Signature.create(['s', 't'], {'s': ['c0', 'c1'], 't': ['d0']}, {'P': ['s'], 'R': ['s', 't']})


def formulas(depth, scope=()):
    """Strategy for formulas over the fixture signature, with the variables of `scope` in reach"""
    scope = dict(scope)
    terms = {
        sort: st.sampled_from([Const(name, sort) for name in constants] + [
            Var(name, sort) for name, bound in scope.items() if bound == sort
        ])
        for sort, constants in (('s', ['c0', 'c1']), ('t', ['d0']))
    }
    atoms = st.one_of(
        terms['s'].map(lambda term: Atom('P', (term,))),
        st.tuples(terms['s'], terms['t']).map(lambda args: Atom('R', args)),
        st.builds(Eq, terms['s'], terms['s']),
        st.builds(Eq, terms['t'], terms['t']),
    )
    if depth == 0:
        return atoms
    parts = st.lists(formulas(depth - 1, scope.items()), min_size=1, max_size=3).map(tuple)
    quantified = st.sampled_from([('x', 's'), ('y', 't')]).flatmap(
        lambda bound: st.tuples(
            st.sampled_from([Exists, Forall]), formulas(depth - 1, {**scope, bound[0]: bound[1]}.items())
        ).map(lambda pair: pair[0](bound[0], bound[1], pair[1]))
    )
    return st.one_of(
        atoms, formulas(depth - 1, scope.items()).map(Not), parts.map(And), parts.map(Or), quantified,
    )


class TestParseFormula:
    """Test class for parse_formula"""
    @staticmethod
    def test_atom(signature):
        """Atoms should resolve their constants with their sorts"""
        assert parse_formula('R(c1, d0)', signature) == Atom('R', (Const('c1', 's'), Const('d0', 't')))

    @staticmethod
    def test_nested(signature):
        """Quantifiers should bind their variables in their bodies"""
        formula = parse_formula('Exists x:s . And[P(x); !(x = c0)]', signature)
        x = Var('x', 's')
        assert formula == Exists('x', 's', And((Atom('P', (x,)), Not(Eq(x, Const('c0', 's'))))))

    @staticmethod
    def test_free_variables(signature):
        """Declared free variables should be accepted"""
        assert parse_formula('P(y)', signature, {'y': 's'}) == Atom('P', (Var('y', 's'),))

    @staticmethod
    @pytest.mark.parametrize('text', [
        'P(c0',
        'And[]',
        'P(c0) P(c1)',
        'Exists x . P(x)',
        '',
    ])
    def test_syntax_error(signature, text):
        """Malformed input should raise a FormulaSyntaxError"""
        with pytest.raises(FormulaSyntaxError):
            parse_formula(text, signature)

    @staticmethod
    @pytest.mark.parametrize('text', ['Q(c0)', 'P(c9)', 'P(x)', 'Forall x:u . P(x)'])
    def test_unknown_symbol(signature, text):
        """Undeclared names and unbound variables should raise an UnknownSymbol"""
        with pytest.raises(UnknownSymbol):
            parse_formula(text, signature)

    @staticmethod
    @pytest.mark.parametrize('text', ['(c0 = d0)', 'R(d0, c0)', 'P(c0, c1)', 'Forall x:t . P(x)'])
    def test_sort_error(signature, text):
        """Ill-sorted formulae should raise a SortError"""
        with pytest.raises(SortError):
            parse_formula(text, signature)

    @staticmethod
    @pytest.mark.parametrize('text', [
        'P(c0)',
        '!(c0 = c1)',
        'Or[P(c0); !R(c1, d0)]',
        'Forall x:s . Exists y:t . Or[!P(x); R(x, y)]',
        'And[Or[P(c0); P(c1)]; !(c1 = c0)]',
    ])
    def test_render_reads_back(signature, text):
        """Rendering a parsed formula should read back to an equal formula"""
        formula = parse_formula(text, signature)
        assert parse_formula(render_formula(formula), signature) == formula

    @staticmethod
    @given(formulas(2))
    def test_render_reads_back_generated(signature, formula):
        """Rendering any generated sentence should read back to an equal formula"""
        assert parse_formula(render_formula(formula), signature) == formula


class TestParseLiterals:
    """Test class for parse_literal and parse_literals"""
    @staticmethod
    def test_literal(signature):
        """Negated atoms should become negative literals"""
        literal = parse_literal('!P(c1)', signature)
        assert literal == Literal(Atom('P', (Const('c1', 's'),)), False)
        assert render_literal(literal) == '!P(c1)'

    @staticmethod
    def test_not_a_literal(signature):
        """Compound formulae should be rejected as literals"""
        with pytest.raises(SortError):
            parse_literal('Or[P(c0); P(c1)]', signature)

    @staticmethod
    def test_set(signature):
        """Literal sets should be read in input order"""
        literals = parse_literals('{P(c1), !(c0 = c1)}', signature)
        assert [render_literal(literal) for literal in literals] == ['P(c1)', '!(c0 = c1)']

    @staticmethod
    def test_empty_set(signature):
        """The empty literal set should parse"""
        assert parse_literals('{}', signature) == ()
