"""Scenario files: a signature, a class of structures, a theory, schedule directives and a start condition, in one
UTF-8 JSON document.

Top-level keys, all but `signature` optional::

    format     {"version": 1, "pairing": "cantor"}
    signature  {"sorts": [...], "constants": {sort: [...]}, "relations": {name: [sort, ...]}}
    class      {"bounds": {sort: n}, "constraint": DSL, "discrete": [sort, ...], "members": [structure literal, ...]}
    theory     {"equality": true, "qe": true, "witnesses": [{"var", "sort", "formula"}], "axioms": [DSL or
               {"label", "formula"}]}
    schedule   {"decide_all": true, "order": "theory-first", "round_robin": false, "dense": [{"kind": "decide",
               "atom": DSL} or {"kind": "hit_disjunct", "literals": DSL set, "label"}]}
    start      DSL literal set, default "{}"
    output     {"artifacts": ["sigma", "trace", "model", "summary"]}

"""
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from .codec.wfe import PAIRING
from .forcing.condition import Condition
from .forcing.dense import DenseSpec
from .forcing.errors import ForcingError
from .io.hashing import text_digest
from .logic.axioms import equality_axioms, qe_axioms
from .logic.errors import LogicError
from .logic.formula import Axiom, Theory
from .logic.parser import parse_formula, parse_literal, parse_literals
from .logic.signature import Signature
from .semantics.enumeration import ClassSpec
from .semantics.errors import SemanticsError
from .semantics.structure import parse_structure

LOGGER = logging.getLogger(__name__)

FORMAT_VERSION = 1
ORDERS = ('theory-first', 'decide-first')
ARTIFACTS = ('sigma', 'trace', 'model', 'summary')
BUNDLED = Path(__file__).parent / 'scenarios'
TOP_LEVEL = ('format', 'signature', 'class', 'theory', 'schedule', 'start', 'output')


class ScenarioError(Exception):
    """Raised when a scenario cannot be read or violates a precondition.

    Attributes
    ----------
    location : str
        Path of the offending entry in the document, e.g. ``theory.axioms[2]``, or None.

    """
    def __init__(self, message, location=None):
        super().__init__(message if location is None else f'{location}: {message}')
        self.location = location


@dataclass(frozen=True)
class Scenario:
    """A validated scenario.

    Attributes
    ----------
    name : str
    signature : :obj:`genmodel.logic.signature.Signature`
    class_spec : :obj:`genmodel.semantics.enumeration.ClassSpec`
    theory : :obj:`genmodel.logic.formula.Theory`
    dense : tuple of :obj:`genmodel.forcing.dense.DenseSpec`
        Dense sets scheduled in addition to those of the theory.
    decide_all : bool
        Whether to schedule a decision for every atomic sentence.
    order : str
        One of 'theory-first' or 'decide-first'.
    round_robin : bool
        Whether to interleave the theory and decision groups.
    start : :obj:`genmodel.forcing.condition.Condition`
    artifacts : tuple of str
        Build artifacts to emit.
    digest : str
        MetroHash of the canonical form of the document.

    """
    name: str
    signature: Signature
    class_spec: ClassSpec
    theory: Theory
    dense: tuple = ()
    decide_all: bool = True
    order: str = 'theory-first'
    round_robin: bool = False
    start: Condition = None
    artifacts: tuple = ARTIFACTS
    digest: str = ''


def _expect(value, dtype, location):
    if not isinstance(value, dtype) or (dtype is int and isinstance(value, bool)):
        names = dtype.__name__ if isinstance(dtype, type) else ' or '.join(item.__name__ for item in dtype)
        raise ScenarioError(f"expected {names}, got {type(value).__name__}", location)
    return value


def _guarded(location, func, *args, **kwargs):
    """Call `func`, turning errors of the engine into located scenario errors."""
    try:
        return func(*args, **kwargs)
    except (LogicError, SemanticsError, ForcingError, ValueError, TypeError, KeyError) as err:
        raise ScenarioError(str(err), location) from err


def _signature(document):
    if 'signature' not in document:
        raise ScenarioError("missing key 'signature'")
    raw = _expect(document['signature'], dict, 'signature')
    sorts = _expect(raw.get('sorts', []), list, 'signature.sorts')
    constants = _expect(raw.get('constants', {}), dict, 'signature.constants')
    relations = _expect(raw.get('relations', {}), dict, 'signature.relations')
    return _guarded('signature', Signature.create, sorts, constants, relations)


def _class_spec(raw, sig):
    raw = _expect(raw, dict, 'class')
    bounds = _expect(raw.get('bounds', {}), dict, 'class.bounds')
    for sort, bound in bounds.items():
        _expect(bound, int, f'class.bounds.{sort}')
    constraint = raw.get('constraint')
    if constraint is not None:
        constraint = _guarded('class.constraint', parse_formula, _expect(constraint, str, 'class.constraint'), sig)
    discrete = tuple(_expect(raw.get('discrete', []), list, 'class.discrete'))
    members = raw.get('members')
    if members is not None:
        members = tuple(
            _guarded(f'class.members[{index}]', parse_structure, _expect(text, str, f'class.members[{index}]'), sig)
            for index, text in enumerate(_expect(members, list, 'class.members'))
        )
    return _guarded('class', ClassSpec, sig, tuple(bounds.items()), constraint, discrete, members)


def _theory(raw, sig):
    raw = _expect(raw, dict, 'theory')
    theory = Theory()
    if _expect(raw.get('equality', True), bool, 'theory.equality'):
        theory += equality_axioms(sig)
    witnesses = []
    for index, entry in enumerate(_expect(raw.get('witnesses', []), list, 'theory.witnesses')):
        location = f'theory.witnesses[{index}]'
        entry = _expect(entry, dict, location)
        free = {_expect(entry.get('var', 'x'), str, location): _expect(entry.get('sort'), str, location)}
        witnesses.append(_guarded(location, parse_formula, _expect(entry.get('formula'), str, location), sig, free))
    if _expect(raw.get('qe', True), bool, 'theory.qe'):
        theory += _guarded('theory.witnesses', qe_axioms, sig, witnesses)
    axioms = []
    for index, entry in enumerate(_expect(raw.get('axioms', []), list, 'theory.axioms')):
        location = f'theory.axioms[{index}]'
        if isinstance(entry, str):
            label, text = f'ax({index})', entry
        else:
            entry = _expect(entry, dict, location)
            label = _expect(entry.get('label', f'ax({index})'), str, location)
            text = _expect(entry.get('formula'), str, location)
        sentence = _guarded(location, parse_formula, text, sig)
        axioms.append(Axiom(sentence, 'user', label))
    return theory + Theory(tuple(axioms))


def _dense(raw, sig):
    specs = []
    for index, entry in enumerate(_expect(raw, list, 'schedule.dense')):
        location = f'schedule.dense[{index}]'
        entry = _expect(entry, dict, location)
        kind = entry.get('kind')
        if kind == 'decide':
            literal = _guarded(location, parse_literal, _expect(entry.get('atom'), str, location), sig)
            specs.append(DenseSpec.decide(literal.atom, entry.get('label'), group='dense'))
        elif kind == 'hit_disjunct':
            literals = _guarded(location, parse_literals, _expect(entry.get('literals'), str, location), sig)
            label = _expect(entry.get('label', f'dense({index})'), str, location)
            specs.append(_guarded(location, DenseSpec.hit_disjunct, sig, literals, label, group='dense'))
        else:
            raise ScenarioError(f"unknown dense set kind {kind!r}", location)
    return tuple(specs)


def parse_scenario(document, name='scenario'):
    """Validate a decoded scenario document.

    Parameters
    ----------
    document : dict
    name : str

    Returns
    -------
    :obj:`Scenario`

    Raises
    ------
    :obj:`ScenarioError`
        With the location of the first offending entry.

    """
    document = _expect(document, dict, None)
    unknown = sorted(set(document) - set(TOP_LEVEL))
    if unknown:
        raise ScenarioError(f"unknown key(s) {', '.join(unknown)}")
    fmt = _expect(document.get('format', {}), dict, 'format')
    if fmt.get('version', FORMAT_VERSION) != FORMAT_VERSION:
        raise ScenarioError(f"unsupported version {fmt.get('version')!r}", 'format.version')
    if fmt.get('pairing', PAIRING) != PAIRING:
        raise ScenarioError(f"unsupported pairing {fmt.get('pairing')!r}", 'format.pairing')

    sig = _signature(document)
    class_spec = _class_spec(document.get('class', {}), sig)
    theory = _theory(document.get('theory', {}), sig)
    schedule = _expect(document.get('schedule', {}), dict, 'schedule')
    order = schedule.get('order', 'theory-first')
    if order not in ORDERS:
        raise ScenarioError(f"order must be one of {', '.join(ORDERS)}", 'schedule.order')
    start = _guarded('start', parse_literals, _expect(document.get('start', '{}'), str, 'start'), sig)
    output = _expect(document.get('output', {}), dict, 'output')
    artifacts = tuple(_expect(output.get('artifacts', list(ARTIFACTS)), list, 'output.artifacts'))
    if set(artifacts) - set(ARTIFACTS):
        raise ScenarioError(f"artifacts must be among {', '.join(ARTIFACTS)}", 'output.artifacts')

    canonical = json.dumps(document, sort_keys=True, ensure_ascii=False, separators=(',', ':'))
    return Scenario(
        name=name,
        signature=sig,
        class_spec=class_spec,
        theory=theory,
        dense=_dense(schedule.get('dense', []), sig),
        decide_all=_expect(schedule.get('decide_all', True), bool, 'schedule.decide_all'),
        order=order,
        round_robin=_expect(schedule.get('round_robin', False), bool, 'schedule.round_robin'),
        start=_guarded('start', Condition.create, sig, start),
        artifacts=artifacts,
        digest=text_digest(canonical),
    )


def bundled_scenarios():
    """Names of the scenarios shipped with the package."""
    return tuple(sorted(path.stem.replace('_', '-') for path in BUNDLED.glob('*.json')))


def resolve_scenario(reference):
    """Path of a scenario given as a file path or as the name of a bundled scenario."""
    path = Path(reference)
    if path.is_file():
        return path
    bundled = BUNDLED / f"{str(reference).replace('-', '_')}.json"
    if bundled.is_file():
        return bundled
    raise ScenarioError(f"no such scenario file or bundled scenario: '{reference}'")


def load_scenario(reference):
    """Read and validate a scenario file, or a bundled scenario by name.

    Raises
    ------
    :obj:`ScenarioError`

    """
    path = resolve_scenario(reference)
    try:
        document = json.loads(path.read_text(encoding='utf-8'))
    except (OSError, UnicodeDecodeError) as err:
        raise ScenarioError(f"cannot read '{path}': {err}") from err
    except json.JSONDecodeError as err:
        raise ScenarioError(f'invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}') from err
    LOGGER.info("Loaded scenario '%s'.", path)
    return parse_scenario(document, path.stem.replace('_', '-'))
