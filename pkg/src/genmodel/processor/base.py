"""Processors, the single steps a build is composed of.

A :obj:`Processor` applies its `function` to one input. Its behaviour is fixed by :obj:`genmodel.base.Param`
attributes, of which those flagged as identifiers also key the stored output when an `io` storage is supplied.

"""
import logging
from abc import abstractmethod
from collections import OrderedDict
from types import FunctionType, MethodType

from ..io import Storable, NoStorage, NoDataSource, NoDataTarget
from ..base import Param
from ..plugboard import Plugboard

LOGGER = logging.getLogger(__name__)


def _positional_params(cls):
    """Names of the positional Params of `cls`, in declaration order."""
    return [name for name, param in cls.collect(Param).items() if param.is_positional]


def _merge_arguments(cls, args, kwargs):
    """Map positional `args` onto the positional Params of `cls` and merge them with `kwargs`."""
    names = _positional_params(cls)
    if len(args) > len(names):
        raise TypeError(f'{cls.__name__} takes at most {len(names)} positional argument(s), got {len(args)}')
    merged = dict(zip(names, args))
    twice = sorted(set(merged).intersection(kwargs))
    if twice:
        raise TypeError(f"{cls.__name__} got argument(s) both by position and keyword: {', '.join(twice)}")
    merged.update(kwargs)
    return merged


class Processor(Plugboard):
    """One step of a build, e.g. meeting the scheduled dense sets or building the term model.

    Attributes
    ----------
    is_output : bool
        Assigned as :obj:`Param`. Whether a Pipeline returns the output of this Processor.
    is_checkpoint : bool
        Assigned as :obj:`Param`. Whether a Pipeline may resume from the last output of this Processor.
    io : :obj:`genmodel.io.storage.Storable`
        Assigned as :obj:`Param`. Storage the output is read from and written to, keyed by the input and the
        :obj:`identifiers`.
    checkpoint_data : object
        Last output, kept only for checkpoints; None before the first call.

    """
    is_output = Param(bool, False)
    is_checkpoint = Param(bool, False)
    io = Param(Storable, NoStorage())

    def __init__(self, *args, **kwargs):
        """Set the Params from keyword arguments, and the positional Params from `args`.

        Raises
        ------
        TypeError
            If there are more `args` than positional Params, or a Param is given both ways.

        """
        super().__init__(**_merge_arguments(type(self), args, kwargs))
        self.checkpoint_data = None

    @abstractmethod
    def function(self, data):
        """Compute the output of this step for `data`."""

    def __call__(self, data):
        """Return the stored output for `data` if `io` holds one, else compute and store it."""
        meta = self.identifiers()
        try:
            # pylint: disable=no-member
            out = self.io.read(data_in=data, meta=meta)
        except NoDataSource:
            out = self.function(data)
            self._store(data, out, meta)
        else:
            LOGGER.debug('%s: output read from storage.', type(self).__name__)
        if self.is_checkpoint:
            self.checkpoint_data = out
        return out

    def _store(self, data, out, meta):
        try:
            # pylint: disable=no-member
            self.io.write(data_out=out, data_in=data, meta=meta)
        except NoDataTarget as err:
            if not isinstance(self.io, NoStorage):
                LOGGER.warning('%s: output not stored: %s', type(self).__name__, err)

    def param_values(self):
        """Instance values of all Params, by name."""
        return self.collect_attr(Param)

    def identifiers(self):
        """The qualified class name under ``name``, followed by the values of all identifier Params.

        Returns
        -------
        :obj:`collections.OrderedDict`

        """
        identifying = [name for name, param in self.collect(Param).items() if param.is_identifier]
        return OrderedDict([('name', type(self).__qualname__)] + [(name, getattr(self, name)) for name in identifying])

    def copy(self):
        """A new instance with the same Param values and checkpoint data."""
        new = type(self)(**self.param_values())
        new.checkpoint_data = self.checkpoint_data
        return new

    def __repr__(self):
        """E.g. ``TermModelProcessor(strict=True)``; unset Params and the storage are left out."""
        shown = (
            (name, getattr(value, '__name__', value)) for name, value in self.param_values().items()
            if value and name != 'io'
        )
        return f"{type(self).__name__}({', '.join(f'{name}={value}' for name, value in shown)})"


class FunctionProcessor(Processor):
    """Processor around a plain callable, used for the default steps of Tasks.

    Attributes
    ----------
    function : :obj:`types.FunctionType` or :obj:`types.MethodType`
        Called with the input, or, if `bind_method`, with the Processor and the input.
    bind_method : bool
        Bind `function` to the Processor on the first call.

    """
    function = Param((MethodType, FunctionType), (lambda data: data), positional=True)
    bind_method = Param(bool, False)

    def __call__(self, data):
        if self.bind_method and not isinstance(self.function, MethodType):
            self.function = self.function.__get__(self, type(self))
        return super().__call__(data)


def ensure_processor(proc, **kwargs):
    """Return `proc` as a Processor, wrapping callables into a :obj:`FunctionProcessor`, with its defaults updated
    by `kwargs`.

    Raises
    ------
    TypeError
        If `proc` is neither a Processor nor callable.

    """
    if not isinstance(proc, Processor):
        if not callable(proc):
            raise TypeError(f'Cannot use {proc!r} as a Processor: it is not callable.')
        proc = FunctionProcessor(function=proc)
    proc.update_defaults(**kwargs)
    return proc
