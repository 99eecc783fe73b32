"""Declaration-order tracking of class attributes, used to find the Params and Tasks of a class in order."""
from abc import ABCMeta
from collections import OrderedDict


def _is_dunder(name):
    """Whether `name` is enclosed in double underscores."""
    return name.startswith('__') and name.endswith('__')


class MetaTracker(ABCMeta):
    """Meta class recording the public attributes of each class in the order they were declared, merged with those of
    its tracked bases, as the class attribute `__tracked__`.
    """
    # pylint: disable=arguments-differ
    def __new__(mcs, classname, bases, namespace):
        result = super().__new__(mcs, classname, bases, namespace)
        tracked = OrderedDict()
        for base in reversed(result.__mro__[1:]):
            tracked.update(base.__dict__.get('__tracked__', {}))
        tracked.update((key, value) for key, value in namespace.items() if not _is_dunder(key))
        result.__tracked__ = tracked
        return result


class Tracker(metaclass=MetaTracker):
    """Base of all classes whose attributes should be collectable by type, in order of declaration."""
    @classmethod
    def collect(cls, dtype):
        """Return tracked class attributes which are instances of `dtype`.

        Parameters
        ----------
        dtype : type or tuple of type
            Type(s) of the class attributes to collect.

        Returns
        -------
        :obj:`collections.OrderedDict`
            Attribute names mapped to the class attributes, in declaration order.

        """
        # pylint: disable=no-member
        return OrderedDict((key, val) for key, val in cls.__tracked__.items() if isinstance(val, dtype))

    def collect_attr(self, dtype):
        """Return the instance values of tracked class attributes which are instances of `dtype`.

        Parameters
        ----------
        dtype : type or tuple of type
            Type(s) of the class attributes to collect.

        Returns
        -------
        :obj:`collections.OrderedDict`
            Attribute names mapped to the values seen through the instance, in declaration order.

        """
        return OrderedDict((key, getattr(self, key)) for key in self.collect(dtype))
