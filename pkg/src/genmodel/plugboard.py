"""Plugboards are classes holding type-checked Slots, which are filled by keyword arguments or fall back to defaults."""
from .tracker import Tracker


class Slot:
    """Descriptor holding one type-checked value per instance of the owning class.

    Values are looked up in this order: the value assigned to the instance, the instance's own default (see
    :obj:`Plugboard.update_defaults`) and the default of the Slot. If none of them is set, accessing the Slot raises a
    TypeError.

    Attributes
    ----------
    dtype : tuple of type
        Allowed type(s) of the held values.
    default : object
        Class-wide fallback value, or None if there is none.

    """
    def __init__(self, dtype=object, default=None):
        self._dtype = dtype if isinstance(dtype, tuple) else (dtype,)
        if not all(isinstance(element, type) for element in self._dtype):
            raise TypeError(f"Slot dtype '{dtype}' is neither a type, nor a tuple of types.")
        self.__name__ = ''
        self._default = None
        self.default = default

    def __set_name__(self, owner, name):
        self.__name__ = name

    @property
    def dtype(self):
        """Allowed type(s) of the held values."""
        return self._dtype

    @property
    def default(self):
        """Class-wide fallback value."""
        return self._default

    @default.setter
    def default(self, value):
        if value is not None:
            value = self.check(self.convert(value))
        self._default = value

    @property
    def optional(self):
        """Whether the Slot can be read without being assigned."""
        return self._default is not None

    def convert(self, value):
        """Hook to coerce assigned values before type checking; returns `value` unchanged."""
        return value

    def check(self, value):
        """Return `value` if it is of an allowed type.

        Raises
        ------
        TypeError
            If `value` is not an instance of `self.dtype`.

        """
        if not isinstance(value, self.dtype):
            raise TypeError(
                f"'{type(self).__name__}' object '{self.__name__}' value '{value}' is not of type '{self.dtype}'."
            )
        return value

    @staticmethod
    def _instance_defaults(instance):
        return instance.__dict__.setdefault('__defaults__', {})

    def get_default(self, instance):
        """Return the default visible to `instance`, which may be None."""
        return self._instance_defaults(instance).get(self.__name__, self._default)

    def set_default(self, instance, value):
        """Set the default of this Slot for `instance` only. None removes it."""
        defaults = self._instance_defaults(instance)
        if value is None:
            defaults.pop(self.__name__, None)
        else:
            defaults[self.__name__] = self.check(self.convert(value))

    def __get__(self, instance, owner):
        if instance is None:
            return self
        try:
            return instance.__dict__[self.__name__]
        except KeyError:
            pass
        value = self.get_default(instance)
        if value is None:
            raise TypeError(
                f"'{type(self).__name__}' object '{self.__name__}' is mandatory, yet it has been accessed without "
                "being set."
            )
        return value

    def __set__(self, instance, value):
        if value is None:
            self.__delete__(instance)
            return
        instance.__dict__[self.__name__] = self.check(self.convert(value))

    def __delete__(self, instance):
        if self.get_default(instance) is None:
            raise TypeError(f"'{type(self).__name__}' object '{self.__name__}' is mandatory and cannot be deleted.")
        instance.__dict__.pop(self.__name__, None)


class Plugboard(Tracker):
    """Owner of Slots, which are filled from keyword arguments on instantiation.

    Raises
    ------
    TypeError
        On keyword arguments which do not name a Slot.

    """
    def __init__(self, **kwargs):
        slots = self.collect(Slot)
        unknown = sorted(set(kwargs) - set(slots))
        if unknown:
            raise TypeError(f"'{type(self).__name__}' got unexpected keyword argument(s): {', '.join(unknown)}")
        super().__init__()
        for key, val in kwargs.items():
            setattr(self, key, val)

    def update_defaults(self, **kwargs):
        """Set instance-level defaults of Slots by name, which take effect where no value has been assigned."""
        slots = self.collect(Slot)
        for key, val in kwargs.items():
            try:
                slot = slots[key]
            except KeyError as err:
                raise TypeError(f"'{type(self).__name__}' has no slot '{key}'.") from err
            slot.set_default(self, val)

    def reset_defaults(self):
        """Drop all instance-level defaults."""
        self.__dict__.pop('__defaults__', None)
