"""Command line interface: check conditions, build term models, decode codes and run the bundled demonstrations.

Exit status 0 on success, 1 if a condition is not in the forcing or a build fails, 2 on malformed input.

"""
import logging

import click

from .codec.errors import CodecError
from .codec.hfset import parse_hfset
from .codec.wfe import cod_decode, cod_encode, parse_code
from .demo import DEMOS, run_demo
from .forcing.condition import Condition
from .forcing.errors import ForcingError, OracleFailure
from .forcing.oracle import ClassOracle
from .io.storage import TextDirectoryStorage
from .logic.errors import LogicError
from .logic.parser import parse_literals
from .pipeline.build import BuildPipeline, render_artifacts
from .processor.construction import BuildState
from .scenario import load_scenario, ScenarioError
from .termmodel.errors import TermModelError

LOGGER = logging.getLogger(__name__)

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


def fail(ctx, message, code):
    """Print `message` on stderr and exit with `code`."""
    click.echo(f'error: {message}', err=True)
    ctx.exit(code)


@click.group()
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), default='WARNING')
@click.option('--seed', envvar='GM_SEED', type=int, default=0, help='Reserved; construction is canonical.')
@click.pass_context
def main(ctx, log_level, seed):
    """Build models of infinitary theories from forcing over finite classes of structures."""
    logging.basicConfig(level=getattr(logging, log_level.upper()), format='%(levelname)s %(name)s: %(message)s')
    if seed:
        LOGGER.info('GM_SEED=%d accepted and ignored.', seed)
    ctx.obj = {'seed': seed}


@main.command()
@click.argument('scenario')
@click.argument('condition')
@click.pass_context
def check(ctx, scenario, condition):
    """Decide whether CONDITION, a literal set like '{P(c0), !(c0 = c1)}', is realized in the class of SCENARIO."""
    try:
        loaded = load_scenario(scenario)
        literals = parse_literals(condition, loaded.signature)
        inside = ClassOracle(loaded.class_spec).is_condition(Condition.create(loaded.signature, literals))
    except (ScenarioError, LogicError, OracleFailure) as err:
        fail(ctx, err, 2)
        return
    click.echo('IN P_A' if inside else 'NOT IN P_A')
    ctx.exit(0 if inside else 1)


@main.command()
@click.argument('scenario')
@click.option('--out', 'out', type=click.Path(file_okay=False), help='Directory to write the artifacts to.')
@click.pass_context
def build(ctx, scenario, out):
    """Construct the maximal set of SCENARIO, its term model and the verification summary."""
    try:
        loaded = load_scenario(scenario)
    except (ScenarioError, LogicError) as err:
        fail(ctx, err, 2)
        return
    try:
        state = BuildPipeline.for_scenario(loaded, ctx.obj['seed'])(BuildState.start(loaded))
    except (ForcingError, TermModelError) as err:
        fail(ctx, f'{type(err).__name__}: {err}', 1)
        return
    except LogicError as err:
        fail(ctx, err, 2)
        return
    artifacts = render_artifacts(state)
    if out is not None:
        storage = TextDirectoryStorage(out)
        for name, text in artifacts.items():
            storage[name] = text
            click.echo(f'wrote {name}.txt')
    else:
        for name, text in artifacts.items():
            click.echo(f'== {name} ==')
            click.echo(text, nl=False)
    ok = state.welldefined.ok and all(verdict is not None and verdict.value for _, verdict in state.verdicts)
    ctx.exit(0 if ok else 1)


@main.command()
@click.argument('literal')
@click.pass_context
def decode(ctx, literal):
    """Decode a code LITERAL (wfe:{(0,1)}, wfe[2]:{}, bits:001) into a set; a set literal ({{}}, ack:1) is echoed
    with its canonical code.
    """
    try:
        if literal.strip().startswith(('wfe', 'bits')):
            result = cod_decode(parse_code(literal))
            value, flag, code = result.value, result.flag, None
        else:
            value, flag = parse_hfset(literal), 'valid'
            code = cod_encode(value)
    except CodecError as err:
        fail(ctx, err, 2)
        return
    click.echo(value.render())
    click.echo(f'ack:{value.code}')
    if code is not None:
        click.echo(code.render())
        click.echo(f'bits:{code.to_bits()}')
    click.echo(f'flag: {flag}')


@main.command()
@click.argument('name', type=click.Choice(DEMOS))
@click.option('--k', 'k', type=click.IntRange(min=1), default=3, help='Stage budget of the counterexample.')
@click.pass_context
def demo(ctx, name, k):
    """Run the bundled demonstration NAME."""
    try:
        report = run_demo(name, k, ctx.obj['seed'])
    except (ScenarioError, LogicError) as err:
        fail(ctx, err, 2)
        return
    except (ForcingError, TermModelError) as err:
        fail(ctx, f'{type(err).__name__}: {err}', 1)
        return
    click.echo(report.render())
    ctx.exit(0 if report.ok else 1)
