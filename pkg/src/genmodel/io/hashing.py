"""Persistent, non-cryptographic hashing of python objects and texts, used for memoization keys and artifact digests.

"""
import pickle

# pylint: disable=no-name-in-module
from metrohash import MetroHash128


class Hasher:
    """MetroHash128 with a write function for file-like updates."""
    def __init__(self):
        self._hash = MetroHash128()

    def write(self, data):
        """Update using write for file-like behaviour"""
        self._hash.update(data)
        return len(data)

    def hexdigest(self):
        """Hex digest of everything written so far."""
        return self._hash.hexdigest()


def ext_hash(data):
    """Extended non-cryptographic Hashing using Pickle and MetroHash

    Raises
    ------
    pickle.PicklingError, TypeError, AttributeError
        If `data` holds objects which cannot be pickled, such as generators or local functions.

    """
    hasher = Hasher()
    pickle.Pickler(hasher).dump(data)
    return hasher.hexdigest()


def text_digest(text):
    """MetroHash of the UTF-8 encoding of `text`, as a hex string."""
    hasher = Hasher()
    hasher.write(text.encode('utf-8'))
    return hasher.hexdigest()
