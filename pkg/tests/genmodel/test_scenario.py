"""Test module for genmodel/scenario.py"""
import copy
import json

import pytest

from genmodel.forcing.dense import DenseKind
from genmodel.scenario import (
    ScenarioError, bundled_scenarios, load_scenario, parse_scenario, resolve_scenario,
)


@pytest.fixture(name='document')
def fixture_document():
    """A small valid scenario document."""
    return {
        'format': {'version': 1, 'pairing': 'cantor'},
        'signature': {'sorts': ['s'], 'constants': {'s': ['c0', 'c1']}, 'relations': {'P': ['s']}},
        'class': {'bounds': {'s': 2}, 'constraint': 'Exists x:s . P(x)'},
        'theory': {'axioms': ['Or[P(c0); P(c1)]', {'label': 'not-both', 'formula': 'Or[!P(c0); !P(c1)]'}]},
        'schedule': {
            'decide_all': False,
            'dense': [
                {'kind': 'decide', 'atom': 'P(c1)'},
                {'kind': 'hit_disjunct', 'literals': '{!(c0 = c1)}', 'label': 'apart'},
            ],
        },
        'start': '{P(c0)}',
        'output': {'artifacts': ['sigma', 'summary']},
    }


def mutated(document, path, value):
    """A deep copy of `document` with the entry at the key tuple `path` replaced, or removed if `value` is None."""
    result = copy.deepcopy(document)
    target = result
    for key in path[:-1]:
        target = target[key]
    if value is None:
        del target[path[-1]]
    else:
        target[path[-1]] = value
    return result


class TestParseScenario:
    """Test class for parse_scenario"""
    @staticmethod
    def test_valid(document):
        """A valid document should be read with all its parts"""
        scenario = parse_scenario(document, 'small')
        assert scenario.name == 'small'
        assert scenario.signature.sorts == ('s',)
        assert scenario.start.render() == '{P(c0)}'
        assert scenario.artifacts == ('sigma', 'summary')
        assert not scenario.decide_all
        assert [spec.kind for spec in scenario.dense] == [DenseKind.DECIDE, DenseKind.HIT_DISJUNCT]
        assert scenario.dense[1].label == 'apart'

    @staticmethod
    def test_axiom_labels(document):
        """Axioms should keep their labels, or be labelled by position"""
        labels = [axiom.label for axiom in parse_scenario(document).theory if axiom.provenance == 'user']
        assert labels == ['ax(0)', 'not-both']

    @staticmethod
    def test_standard_theory(document):
        """Equality and surjectivity axioms should be added unless disabled"""
        provenances = {axiom.provenance for axiom in parse_scenario(document).theory}
        assert {'qe', 'user'} <= provenances
        bare = mutated(document, ('theory', 'equality'), False)
        bare = mutated(bare, ('theory', 'qe'), False)
        assert {axiom.provenance for axiom in parse_scenario(bare).theory} == {'user'}

    @staticmethod
    def test_defaults():
        """Only the signature should be required"""
        scenario = parse_scenario({'signature': {'sorts': ['s'], 'constants': {'s': ['c0']}}})
        assert scenario.decide_all
        assert scenario.order == 'theory-first'
        assert scenario.start.render() == '{}'
        assert scenario.artifacts == ('sigma', 'trace', 'model', 'summary')

    @staticmethod
    def test_digest(document):
        """The digest should not depend on key order, but on every value"""
        reordered = dict(reversed(list(document.items())))
        assert parse_scenario(reordered).digest == parse_scenario(document).digest
        changed = mutated(document, ('start', ), '{P(c1)}')
        assert parse_scenario(changed).digest != parse_scenario(document).digest

    @staticmethod
    @pytest.mark.parametrize('path,value,location', [
        (('format', 'version'), 2, 'format.version'),
        (('format', 'pairing'), 'szudzik', 'format.pairing'),
        (('signature', 'sorts'), 's', 'signature.sorts'),
        (('signature', 'constants'), {'t': ['c0']}, 'signature'),
        (('class', 'bounds', 's'), 'two', 'class.bounds.s'),
        (('class', 'constraint'), 'Exists x:s . Q(x)', 'class.constraint'),
        (('class', 'members'), ['s: {a}; c0 -> b'], 'class.members[0]'),
        (('theory', 'equality'), 'yes', 'theory.equality'),
        (('theory', 'axioms'), ['P(c0)', 'P(c0'], 'theory.axioms[1]'),
        (('theory', 'witnesses'), [{'sort': 's', 'formula': 'P(c0)'}], 'theory.witnesses'),
        (('schedule', 'order'), 'random', 'schedule.order'),
        (('schedule', 'decide_all'), 1, 'schedule.decide_all'),
        (('schedule', 'dense'), [{'kind': 'custom'}], 'schedule.dense[0]'),
        (('schedule', 'dense'), [{'kind': 'decide', 'atom': 'P(d0)'}], 'schedule.dense[0]'),
        (('start', ), 'P(c0)', 'start'),
        (('output', 'artifacts'), ['sigma', 'pdf'], 'output.artifacts'),
    ])
    def test_invalid(document, path, value, location):
        """Invalid entries should raise a ScenarioError naming their location"""
        with pytest.raises(ScenarioError) as excinfo:
            parse_scenario(mutated(document, path, value))
        assert excinfo.value.location == location
        assert str(excinfo.value).startswith(f'{location}: ')

    @staticmethod
    @pytest.mark.parametrize('document,message', [
        ([], 'expected dict'),
        ({'signature': {'sorts': ['s']}, 'extra': 1}, 'unknown key(s) extra'),
        ({'class': {}}, "missing key 'signature'"),
    ])
    def test_invalid_top_level(document, message):
        """Invalid documents should raise a ScenarioError without a location"""
        with pytest.raises(ScenarioError) as excinfo:
            parse_scenario(document)
        assert excinfo.value.location is None
        assert message in str(excinfo.value)


class TestLoadScenario:
    """Test class for loading and resolving scenario files"""
    @staticmethod
    def test_bundled():
        """The bundled scenarios should be listed by name and load"""
        names = bundled_scenarios()
        assert {'exactly-one-p', 'mini-certificate'} <= set(names)
        for name in names:
            assert load_scenario(name).name == name

    @staticmethod
    def test_resolve_bundled():
        """Names of bundled scenarios should resolve to their files"""
        assert resolve_scenario('mini-certificate').name == 'mini_certificate.json'

    @staticmethod
    def test_file(tmp_path, document):
        """A scenario file should be read and named after its stem"""
        path = tmp_path / 'two_constants.json'
        path.write_text(json.dumps(document), encoding='utf-8')
        assert load_scenario(str(path)).name == 'two-constants'

    @staticmethod
    def test_missing(tmp_path):
        """A missing file which is no bundled scenario should raise a ScenarioError"""
        with pytest.raises(ScenarioError):
            load_scenario(str(tmp_path / 'absent.json'))

    @staticmethod
    def test_invalid_json(tmp_path):
        """Malformed JSON should raise a ScenarioError with its position"""
        path = tmp_path / 'broken.json'
        path.write_text('{"signature": ', encoding='utf-8')
        with pytest.raises(ScenarioError, match='invalid JSON at line 1'):
            load_scenario(str(path))
