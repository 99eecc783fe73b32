"""Pipelines of Tasks, e.g. the build of a scenario: schedule, construction, term model and verification.

"""
import logging
from collections import OrderedDict

from ..processor.base import ensure_processor, Processor
from ..plugboard import Slot

LOGGER = logging.getLogger(__name__)


def _passthrough(data):
    return data


class Task(Slot):
    """A step of a :obj:`Pipeline`. Assigned values, and the default, are Processors of `proc_type`; plain callables
    are wrapped into a :obj:`genmodel.processor.base.FunctionProcessor`.

    """
    def __init__(self, proc_type=Processor, default=_passthrough, **kwargs):
        """Declare a step taking Processors of `proc_type`.

        Parameters
        ----------
        proc_type : type
            Subclass of :obj:`Processor` accepted by this Task.
        default : :obj:`Processor` or callable, optional
            Processor run if none is assigned. The identity by default.
        **kwargs :
            Param defaults to set on the default Processor, e.g. ``is_output=True``.

        Raises
        ------
        TypeError
            If `proc_type` is not a Processor class, or `default` is not of `proc_type`.

        """
        if not (isinstance(proc_type, type) and issubclass(proc_type, Processor)):
            raise TypeError(f'Tasks take Processor classes, not {proc_type!r}.')
        super().__init__(dtype=proc_type, default=None if default is None else ensure_processor(default, **kwargs))

    @property
    def proc_type(self):
        """Class of the Processors accepted by this Task."""
        return self.dtype[0]

    def convert(self, value):
        return ensure_processor(value)


class Pipeline(Processor):
    """Processor running the Processors of its Task attributes in order of declaration.

    The output is that of the Processors flagged `is_output`: a single value for one, a tuple for several, and the
    output of the last Processor if none is flagged.

    """
    def tasks(self):
        """Processors currently assigned to the Tasks, by name."""
        return self.collect_attr(Task)

    def checkpoint_processes(self):
        """The last checkpoint Processor followed by all Processors after it.

        Raises
        ------
        RuntimeError
            If no Processor is a checkpoint.

        """
        names = list(self.tasks())
        marks = [index for index, proc in enumerate(self.tasks().values()) if proc.is_checkpoint]
        if not marks:
            raise RuntimeError(f'{type(self).__name__} has no checkpoint Processor.')
        tasks = self.tasks()
        return OrderedDict((name, tasks[name]) for name in names[marks[-1]:])

    def from_checkpoint(self):
        """Run the Processors after the last checkpoint on its stored output.

        Raises
        ------
        RuntimeError
            If the last checkpoint has not produced an output yet.

        """
        checkpoint, *rest = self.checkpoint_processes().values()
        data = checkpoint.checkpoint_data
        if data is None:
            raise RuntimeError(f'{checkpoint!r} has not run yet; call the whole pipeline first.')
        for proc in rest:
            data = proc(data)
        return data

    def function(self, data):
        outputs = []
        for name, proc in self.tasks().items():
            LOGGER.debug('Running task %s: %r', name, proc)
            data = proc(data)
            if proc.is_output:
                outputs.append(data)
        if not outputs:
            return data
        return outputs[0] if len(outputs) == 1 else tuple(outputs)

    def __repr__(self):
        """One Processor per line."""
        body = ''.join(f'\n    {proc!r}' for proc in self.tasks().values())
        return f'{type(self).__name__}({body}\n)'
