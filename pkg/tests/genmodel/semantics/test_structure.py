"""Test module for genmodel/semantics/structure.py"""
import pytest

from genmodel.logic.formula import BigAnd
from genmodel.logic.parser import parse_formula, render_literal
from genmodel.logic.signature import Signature
from genmodel.semantics.errors import StructureError, UnsupportedFormula
from genmodel.semantics.structure import (
    MultiStructure, atomic_sentences, evaluate, holds_by_literals, parse_structure, realized_literals,
    render_structure,
)


@pytest.fixture(scope='module')
def signature():
    """Fixture single-sorted signature with a binary relation"""
    return Signature.create(['s'], {'s': ['c0', 'c1', 'c2']}, {'E': ['s', 's']})


@pytest.fixture(scope='module')
def structure(signature):
    """Fixture two-element structure with c1 and c2 identified"""
    return parse_structure('s: {c0, c1}; c0 -> c0; c1 -> c1; c2 -> c1; E: {(c0, c1)}', signature)


class TestMultiStructure:
    """Test class for MultiStructure"""
    @staticmethod
    def test_accessors(structure):
        """Values, extensions and sizes should reflect the literal"""
        assert structure.value('c2') == 'c1'
        assert structure.extension('E') == frozenset({('c0', 'c1')})
        assert structure.sizes() == (2,)

    @staticmethod
    def test_defaulted(signature):
        """Omitted relations should be read as empty and flagged"""
        structure = MultiStructure.create(signature, {'s': ['a']}, {'c0': 'a', 'c1': 'a', 'c2': 'a'})
        assert structure.defaulted == ('E',)
        assert not structure.extension('E')

    @staticmethod
    @pytest.mark.parametrize('text', [
        's: {c0}; c0 -> c0; c1 -> c0',
        's: {c0, x}; c0 -> c0; c1 -> c0; c2 -> c0',
        's: {c0}; c0 -> c0; c1 -> c0; c2 -> x',
        's: {c0, c0}; c0 -> c0; c1 -> c0; c2 -> c0',
        's: {c0}; c0 -> c0; c1 -> c0; c2 -> c0; E: {(c0, x)}',
        's: {c0}; c0 -> c0; c1 -> c0; c2 -> c0; F: {}',
        's: {c0}; c0 => c0',
    ])
    def test_invalid(signature, text):
        """Invalid structure literals should raise a StructureError"""
        with pytest.raises(StructureError):
            parse_structure(text, signature)

    @staticmethod
    def test_render_reads_back(structure, signature):
        """Rendering should read back to an equal structure"""
        assert parse_structure(render_structure(structure), signature) == structure


class TestEvaluate:
    """Test class for evaluate"""
    @staticmethod
    @pytest.mark.parametrize('text,expected', [
        ('E(c0, c2)', True),
        ('(c1 = c2)', True),
        ('!(c0 = c1)', True),
        ('Forall x:s . Exists y:s . Or[E(x, y); E(y, x)]', True),
        ('Exists x:s . E(x, x)', False),
        ('And[E(c0, c1); E(c1, c0)]', False),
    ])
    def test_sentences(signature, structure, text, expected):
        """Sentences should be evaluated Tarski-style"""
        assert evaluate(structure, parse_formula(text, signature)) is expected

    @staticmethod
    def test_family(structure):
        """Countable families should not be evaluated directly"""
        with pytest.raises(UnsupportedFormula):
            evaluate(structure, BigAnd('family', lambda: iter(())))


class TestRealizedLiterals:
    """Test class for atomic_sentences and realized_literals"""
    @staticmethod
    def test_count(signature):
        """There should be one atomic sentence per pair of constants and per relation tuple"""
        assert len(list(atomic_sentences(signature))) == 9 + 9

    @staticmethod
    def test_complete(signature, structure):
        """Exactly one of each atomic sentence and its negation should be realized"""
        sigma = realized_literals(structure)
        assert len(sigma) == 18
        assert {literal.atom for literal in sigma} == set(atomic_sentences(signature))

    @staticmethod
    def test_content(structure):
        """Realized literals should agree with the structure"""
        rendered = [render_literal(literal) for literal in realized_literals(structure)]
        assert '(c1 = c2)' in rendered
        assert '!(c0 = c2)' in rendered
        assert 'E(c0, c2)' in rendered
        assert '!E(c2, c0)' in rendered

    @staticmethod
    def test_holds_by_literals(signature, structure):
        """Containment evaluation should agree with Tarskian evaluation on And-Or sentences"""
        sigma = realized_literals(structure)
        for text in ('Or[E(c1, c0); (c0 = c2)]', 'And[Or[E(c0, c1)]; Or[!E(c1, c1); (c0 = c0)]]'):
            sentence = parse_formula(text, signature)
            assert holds_by_literals(sigma, sentence) == evaluate(structure, sentence)
