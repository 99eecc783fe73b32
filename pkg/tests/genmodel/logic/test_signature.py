"""Test module for genmodel/logic/signature.py"""
import pytest

from genmodel.logic.errors import SignatureError
from genmodel.logic.signature import Signature


@pytest.fixture(scope='module')
def signature():
    """Fixture two-sorted signature"""
    return Signature.create(
        ['s', 't'],
        {'s': ['c0', 'c1'], 't': ['d0']},
        {'P': ['s'], 'R': ['s', 't']},
    )


class TestSignature:
    """Test class for Signature"""
    @staticmethod
    def test_canonical_constant_order(signature):
        """Constants should be ordered by sort, then by declaration"""
        assert signature.all_constants() == ('c0', 'c1', 'd0')
        assert signature.constant_index('d0') == 2

    @staticmethod
    def test_lookup(signature):
        """Sorts and relations should be looked up by name"""
        assert signature.sort_of('d0') == 't'
        assert signature.sort_of('nope') is None
        assert signature.relation('R').arity == 2
        assert signature.relation('Q') is None
        assert signature.relation_index('R') == 1

    @staticmethod
    def test_to_dict_roundtrip(signature):
        """The plain-container form should recreate an equal signature"""
        plain = signature.to_dict()
        assert Signature.create(plain['sorts'], plain['constants'], plain['relations']) == signature

    @staticmethod
    @pytest.mark.parametrize('sorts,constants,relations', [
        (['s'], {'s': []}, {}),
        (['s'], {}, {}),
        (['s'], {'s': ['c0'], 't': ['d0']}, {}),
        (['s', 's'], {'s': ['c0']}, {}),
        (['s'], {'s': ['c0', 'c0']}, {}),
        (['s'], {'s': ['c0']}, {'P': []}),
        (['s'], {'s': ['c0']}, {'P': ['t']}),
        (['s'], {'s': ['c0']}, {'c0': ['s']}),
        (['s'], {'s': ['And']}, {}),
        (['s'], {'s': ['0c']}, {}),
    ])
    def test_invalid(sorts, constants, relations):
        """Signatures violating their invariants should raise a SignatureError"""
        with pytest.raises(SignatureError):
            Signature.create(sorts, constants, relations)
