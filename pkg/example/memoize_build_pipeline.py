'''Example composing custom build pipelines, memoizing the construction and writing the artifacts.'''
import time

from genmodel.base import Param
from genmodel.io.storage import HashedMemory, TextDirectoryStorage
from genmodel.pipeline.base import Pipeline, Task
from genmodel.pipeline.build import BuildPipeline, render_artifacts
from genmodel.processor.base import Processor
from genmodel.processor.construction import BuildState, ConstructionProcessor, ScheduleProcessor, TermModelProcessor
from genmodel.scenario import load_scenario


# custom processors can be implemented by defining a function attribute
class ReportUndecided(Processor):
    # parameters can be assigned by defining a class-owned Param instance
    verbose = Param(bool, True)

    def function(self, data):
        undecided = data.sigma.undecided()
        if self.verbose:
            for atom in undecided:
                print('undecided:', atom)
        print(f'{len(data.sigma)} literals, {len(undecided)} atomic sentence(s) undecided')
        return data


# Pipelines can be extended by adding Tasks, which run after the inherited ones
class ReportingBuild(BuildPipeline):
    report = Task(Processor, ReportUndecided(verbose=False))


# or composed from scratch; without decisions the construction may leave atomic sentences undecided, so no term model
# is built here
class PartialConstruction(Pipeline):
    schedule = Task(ScheduleProcessor, ScheduleProcessor(decide_all=False))
    construction = Task(ConstructionProcessor, ConstructionProcessor(maximality=False))
    report = Task(Processor, ReportUndecided())


def main():
    scenario = load_scenario('exactly-one-p')
    # HashedMemory stores outputs of Processors based on hashes of their input and identifying Params
    iobj = HashedMemory()

    pipeline = ReportingBuild(
        schedule=ScheduleProcessor(order='decide-first'),
        # if a corresponding output already exists, the value is not computed again but read from the io object
        construction=ConstructionProcessor(io=iobj, is_checkpoint=True),
        termmodel=TermModelProcessor(strict=False),
    )
    state = pipeline(BuildState.start(scenario))

    # a second build of the same scenario reads the construction from iobj
    start_time = time.perf_counter()
    pipeline(BuildState.start(scenario))
    print(f'Rebuilt with {len(iobj)} stored construction(s) in {time.perf_counter() - start_time:.4f} seconds')

    # Processors can be updated by simply assigning corresponding attributes, and the pipeline resumed from its last
    # checkpoint
    start_time = time.perf_counter()
    pipeline.report = ReportUndecided(verbose=True)
    pipeline.from_checkpoint()
    print(f'Resumed from the construction in {time.perf_counter() - start_time:.4f} seconds')

    # artifacts are plain texts, written one file per artifact
    storage = TextDirectoryStorage('build-exactly-one-p')
    for name, text in render_artifacts(state).items():
        storage[name] = text
    print('Wrote', ', '.join(storage.keys()))

    PartialConstruction()(BuildState.start(scenario))


if __name__ == '__main__':
    main()
