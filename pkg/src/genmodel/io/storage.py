"""Storages for Processor outputs: memoization by hashed input, and text artifacts in a directory.

"""
import copy
import logging
import pickle
from abc import abstractmethod
from pathlib import Path

from ..base import Param
from ..plugboard import Plugboard
from .hashing import ext_hash

LOGGER = logging.getLogger(__name__)


class StorableMeta(type):
    """Instance checks by the presence of `read` and `write`."""
    def __instancecheck__(cls, instance):
        return all(hasattr(instance, attr) for attr in ('write', 'read'))


class Storable(metaclass=StorableMeta):
    """Anything with `read` and `write`, the type of the `io` Param of Processors."""


class NoDataSource(Exception):
    """Raised by storages holding nothing for the requested key."""
    def __init__(self, message='No Data Source available.'):
        super().__init__(message)


class NoDataTarget(Exception):
    """Raised by storages that cannot keep the given output."""
    def __init__(self, message='No Data Target available.'):
        super().__init__(message)


def _key(data_in, meta):
    try:
        return ext_hash((data_in, meta))
    except (pickle.PicklingError, TypeError, AttributeError) as err:
        LOGGER.warning('Input cannot be hashed, its output is not memoized: %s', err)
        return None


class HashedMemory:
    """In-memory storage of Processor outputs, keyed by the hash of (data_in, meta).

    Inputs which cannot be hashed are neither read nor written.

    """
    def __init__(self):
        self.base = {}

    def read(self, data_in, meta):
        """Read the output stored for (data_in, meta)."""
        key = _key(data_in, meta)
        if key is None or key not in self.base:
            raise NoDataSource()
        return self.base[key]

    def write(self, data_out, data_in, meta):
        """Store `data_out` for (data_in, meta)."""
        key = _key(data_in, meta)
        if key is None:
            raise NoDataTarget('Input cannot be hashed.')
        self.base[key] = data_out

    def __len__(self):
        return len(self.base)


class DataStorageBase(Plugboard):
    """Key-value storage whose current key is set with :obj:`at`, e.g. one file per build artifact.

    """
    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self.io = None

    @abstractmethod
    def read(self, data_in=None, meta=None):
        """Read the value of the current key."""

    @abstractmethod
    def write(self, data_out, data_in=None, meta=None):
        """Write `data_out` under the current key."""

    @abstractmethod
    def exists(self):
        """Whether a value is stored under the current key."""

    @abstractmethod
    def keys(self):
        """All stored keys."""

    def __contains__(self, key):
        return self.at(data_key=key).exists()

    def __getitem__(self, key):
        return self.at(data_key=key).read()

    def __setitem__(self, key, value):
        return self.at(data_key=key).write(value)

    def __bool__(self):
        return self.io is not None

    def at(self, **kwargs):
        """A copy of this storage with the Params in `kwargs` set, e.g. ``storage.at(data_key='trace')``."""
        result = copy.copy(self)
        for key, value in kwargs.items():
            if key not in self.collect(Param):
                raise TypeError(f"'{key}' is an invalid keyword argument for '{type(self).__name__}.at'.")
            setattr(result, key, value)
        return result


class NoStorage(DataStorageBase):
    """The storage of Processors without memoization: reads and writes nothing."""
    def __bool__(self):
        return False

    def read(self, data_in=None, meta=None):
        raise NoDataSource()

    def write(self, data_out, data_in=None, meta=None):
        raise NoDataTarget()

    def exists(self):
        raise NoDataSource()

    def keys(self):
        raise NoDataSource()


class TextDirectoryStorage(DataStorageBase):
    """Stores texts as UTF-8 files with LF line endings, one file `<data_key>.txt` per key, in a directory.

    """
    data_key = Param(str, 'data', mandatory=True)

    def __init__(self, path, **kwargs):
        """
        Parameters
        ----------
        path: str or :obj:`pathlib.Path`
            Directory holding the files; created if missing.

        """
        super().__init__(**kwargs)
        self.io = Path(path)
        self.io.mkdir(parents=True, exist_ok=True)

    def _path(self):
        return self.io / f'{self.data_key}.txt'

    def read(self, data_in=None, meta=None):
        """
        Returns
        -------
        str
            Text stored under the current key.

        """
        if not self.exists():
            raise NoDataSource(f"Key: '{self.data_key}' does not exist.")
        return self._path().read_text(encoding='utf-8')

    def write(self, data_out, data_in=None, meta=None):
        """Write the text `data_out` under the current key."""
        with open(self._path(), 'w', encoding='utf-8', newline='\n') as fd:
            fd.write(data_out)
        LOGGER.debug('Wrote %s', self._path())

    def exists(self):
        """Returns True if the file of the current key exists.

        """
        return self._path().is_file()

    def keys(self):
        """Return the keys stored in the directory, sorted.

        """
        return sorted(path.stem for path in self.io.glob('*.txt'))
