"""The build pipeline: from a scenario to its term model, with the text artifacts of a build."""
from collections import OrderedDict

from ..processor.construction import (
    BuildState, ScheduleProcessor, ConstructionProcessor, TermModelProcessor, VerificationProcessor,
)
from ..codec.wfe import PAIRING
from ..utils import lines
from .base import Pipeline, Task


class BuildPipeline(Pipeline):
    """Schedule, construction, term model and verification of a scenario, on :obj:`BuildState` data.

    Example
    -------
    ``state = BuildPipeline.for_scenario(scenario)(BuildState.start(scenario))``

    """
    schedule = Task(ScheduleProcessor, ScheduleProcessor())
    construction = Task(ConstructionProcessor, ConstructionProcessor())
    termmodel = Task(TermModelProcessor, TermModelProcessor())
    verification = Task(VerificationProcessor, VerificationProcessor())

    @classmethod
    def for_scenario(cls, scenario, seed=0):
        """A pipeline configured by the schedule directives of `scenario`."""
        return cls(schedule=ScheduleProcessor(
            decide_all=scenario.decide_all, order=scenario.order, round_robin=scenario.round_robin, seed=seed,
        ))


def summary_lines(state):
    """Verification summary of a finished build."""
    scenario = state.scenario
    verified = [verdict for _, verdict in state.verdicts if verdict is not None]
    true = sum(1 for verdict in verified if verdict.value)
    report = state.maximality
    sizes = ', '.join(f'{sort}={size}' for sort, size in zip(scenario.signature.sorts, state.model.sizes()))
    status = state.welldefined.ok and true == len(state.verdicts) and (report is None or report.decides_all)
    result = [
        f'scenario: {scenario.name}',
        f'digest: {scenario.digest}',
        f'pairing: {PAIRING}',
        f'steps: {len(state.trace)}',
        f'sigma: {len(state.sigma)} literals',
    ]
    if report is not None:
        result.append(
            f"maximality: decides-all {'yes' if report.decides_all else 'no'}"
            f" | no-proper-extension {'yes' if report.no_proper_extension else 'no'}"
        )
    result.extend([
        state.welldefined.render().splitlines()[0] if state.welldefined.ok else 'well-defined: FAIL',
        f'axioms verified: {true}/{len(state.verdicts)} true',
        f'domain sizes: {sizes}',
        f"status: {'OK' if status else 'FAIL'}",
    ])
    return result


def render_artifacts(state):
    """Texts of the artifacts requested by the scenario of a finished build, in the order sigma, trace, model,
    summary; each ends with a LF unless empty.

    """
    texts = OrderedDict(
        sigma=lines(state.sigma.render().splitlines()),
        trace=lines(state.trace.render().splitlines()),
        model=lines(state.model.render().splitlines()),
        summary=lines(summary_lines(state)),
    )
    return OrderedDict((name, text) for name, text in texts.items() if name in state.scenario.artifacts)
