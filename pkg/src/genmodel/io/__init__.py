"""IO-related module for Processor data"""
from .storage import (
    Storable, NoDataSource, NoDataTarget, HashedMemory, DataStorageBase, NoStorage, TextDirectoryStorage,
)
from .hashing import ext_hash, text_digest

__all__ = [
    'Storable',
    'NoDataSource',
    'NoDataTarget',
    'HashedMemory',
    'DataStorageBase',
    'NoStorage',
    'TextDirectoryStorage',
    'ext_hash',
    'text_digest',
]
