"""Module containing the Param slot, with which processors declare their configuration."""
from .plugboard import Slot


class Param(Slot):
    """A single configuration value of a :obj:`genmodel.processor.base.Processor`.

    Attributes
    ----------
    dtype : type or tuple of type
        Allowed type(s) of the parameter.
    default : :obj:`dtype`
        Default parameter value.
    positional : bool
        Whether the Param can also be passed positionally, in declaration order.
    identifier : bool
        Whether the Param identifies a Processor's output, i.e. enters its memoization key.

    """
    def __init__(self, dtype, default=None, mandatory=False, positional=False, identifier=False):
        super().__init__(dtype, None if mandatory else default)
        self._positional = positional
        self._identifier = identifier

    @property
    def is_positional(self):
        """Whether this Param can be assigned as a positional argument of Processor.__init__"""
        return self._positional

    @property
    def is_identifier(self):
        """Whether this Param should be used to identify a Processor"""
        return self._identifier
