"""Bundled demonstrations: the ⋁⋀ counterexample, and the mini-certificate tying a membership-coded sort to the code
read off a branch of a tree.

"""
import logging
from dataclasses import dataclass

from .codec.hfset import HFSet
from .codec.wfe import WfeCode, cod_decode
from .pipeline.build import BuildPipeline
from .processor.construction import BuildState
from .scenario import load_scenario, ScenarioError
from .termmodel.counterexample import refute_oror

LOGGER = logging.getLogger(__name__)

DEMOS = ('oror-counterexample', 'mini-certificate')
NODE_PREFIX = 't_'


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of :func:`mini_certificate`.

    Attributes
    ----------
    branch : str
        Bits along the branch of the tree selected by the term model.
    expected : :obj:`genmodel.codec.hfset.HFSet`
        Decoding of the branch.
    actual : :obj:`genmodel.codec.hfset.HFSet`
        Collapse of the membership-coded sort of the term model.
    flags : tuple of str
        Decoding flags of the branch and of the collapsed sort.

    """
    branch: str
    expected: HFSet
    actual: HFSet
    flags: tuple

    @property
    def ok(self):
        """Whether both codes are valid and decode to the same set."""
        return self.flags == ('valid', 'valid') and self.expected == self.actual

    def render(self):
        """Report lines, ending in the certificate verdict."""
        return '\n'.join([
            'MINI-CERTIFICATE',
            f'  branch: {self.branch}',
            f'  Cod(branch): {self.expected.render()} ack:{self.expected.code} ({self.flags[0]})',
            f'  collapse(N-sort): {self.actual.render()} ack:{self.actual.code} ({self.flags[1]})',
            f"collapse(N-sort) == Cod(branch): {'OK' if self.ok else 'FAIL'}",
        ])


def read_branch(model, sort='B', relation='Br'):
    """Bits of the longest node on the branch selected by `relation`, checking the selected nodes form a chain."""
    nodes = sorted(
        (row[0][len(NODE_PREFIX):] for row in model.extension(relation)),
        key=len,
    )
    if not nodes:
        raise ScenarioError(f"no node of sort '{sort}' is on the branch")
    branch = nodes[-1]
    for node in nodes:
        if not branch.startswith(node):
            raise ScenarioError(f"nodes '{node}' and '{branch}' do not lie on one branch")
    return branch


def sort_code(model, sort='N', relation='In'):
    """The code whose nodes are the classes of `sort` and whose edges are the tuples of `relation`."""
    index = {block[0]: position for position, block in enumerate(model.domain(sort))}
    return WfeCode(len(index), frozenset((index[left], index[right]) for left, right in model.extension(relation)))


def mini_certificate(seed=0):
    """Build the bundled mini-certificate scenario, collapse its sort N and compare with the decoding of the branch
    selected in its sort B.

    Returns
    -------
    :obj:`CertificateReport`

    """
    scenario = load_scenario('mini-certificate')
    state = BuildPipeline.for_scenario(scenario, seed)(BuildState.start(scenario))
    branch = read_branch(state.model)
    expected = cod_decode(WfeCode.from_bits(branch))
    actual = cod_decode(sort_code(state.model))
    LOGGER.info('Branch %s decodes to %s.', branch, expected.value.render())
    return CertificateReport(branch, expected.value, actual.value, (expected.flag, actual.flag))


def run_demo(name, k=3, seed=0):
    """Run a bundled demonstration by name and return its report.

    Raises
    ------
    ValueError
        If `name` is not a bundled demonstration.

    """
    if name == 'oror-counterexample':
        return refute_oror(k)
    if name == 'mini-certificate':
        return mini_certificate(seed)
    raise ValueError(f"unknown demo '{name}', expected one of {', '.join(DEMOS)}")
