"""Test io functionalities

"""
import pytest

from genmodel import io
from genmodel.codec.wfe import WfeCode
from genmodel.io.hashing import ext_hash, text_digest


@pytest.fixture
def text():
    """Return a rendered set of literals with a trailing line feed."""
    return '{!P(c0), P(c1), (c2 = c1)}\n'


class TestHashedMemory:
    """Test class for HashedMemory"""
    @staticmethod
    def test_read_after_write():
        """Reading after writing should return the same object"""
        memory = io.HashedMemory()
        memory.write(data_out=('sigma', 3), data_in=1, meta={'name': 'construction'})
        assert memory.read(data_in=1, meta={'name': 'construction'}) == ('sigma', 3)

    @staticmethod
    def test_read_missing():
        """Reading a key which was never written should raise NoDataSource"""
        memory = io.HashedMemory()
        memory.write(data_out=1, data_in=1, meta=1)
        with pytest.raises(io.NoDataSource):
            memory.read(data_in=1, meta=2)

    @staticmethod
    def test_write_unhashable():
        """Writing an input which cannot be pickled should raise NoDataTarget"""
        memory = io.HashedMemory()
        with pytest.raises(io.NoDataTarget):
            memory.write(data_out=1, data_in=lambda: 0, meta=1)
        with pytest.raises(io.NoDataSource):
            memory.read(data_in=lambda: 0, meta=1)

    @staticmethod
    def test_storable():
        """HashedMemory should count as a Storable"""
        assert isinstance(io.HashedMemory(), io.Storable)
        assert not isinstance(object(), io.Storable)


class TestHashing:
    """Test class for the hashing functions"""
    @staticmethod
    def test_ext_hash_stable():
        """Equal objects should hash equally, and different objects differently"""
        assert ext_hash(('s', ('c0', 'c1'))) == ext_hash(('s', ('c0', 'c1')))
        assert ext_hash(('s', ('c0', 'c1'))) != ext_hash(('s', ('c1', 'c0')))

    @staticmethod
    def test_ext_hash_code():
        """Codes should be hashed by their nodes and edges"""
        assert ext_hash(WfeCode.from_bits('001')) == ext_hash(WfeCode.from_bits('001'))
        assert ext_hash(WfeCode.from_bits('001')) != ext_hash(WfeCode.from_bits('0001'))

    @staticmethod
    def test_text_digest(text):
        """Text digests should be hex strings of 128 bits which depend on every character"""
        digest = text_digest(text)
        assert len(digest) == 32
        int(digest, 16)
        assert digest != text_digest(text.rstrip('\n'))


class TestTextDirectoryStorage:
    """Test class for TextDirectoryStorage"""
    @staticmethod
    def test_at(tmp_path):
        """at should copy the storage with a new key, and validate the key"""
        storage = io.TextDirectoryStorage(tmp_path)
        located = storage.at(data_key='sigma')
        assert located.data_key == 'sigma'
        assert located.io == storage.io
        with pytest.raises(TypeError):
            storage.at(data_key='sigma', key='key')
        with pytest.raises(TypeError):
            storage.at(data_key=1)
        with pytest.raises(TypeError):
            # the data key was never set
            storage.at().exists()

    @staticmethod
    def test_write_read(tmp_path, text):
        """Texts should be written as LF terminated UTF-8 files and read back"""
        storage = io.TextDirectoryStorage(tmp_path / 'out')
        storage.at(data_key='sigma').write(text)
        assert (tmp_path / 'out' / 'sigma.txt').read_bytes() == text.encode('utf-8')
        assert storage['sigma'] == text
        assert 'sigma' in storage
        assert 'model' not in storage
        assert storage.keys() == ['sigma']

    @staticmethod
    def test_setitem(tmp_path, text):
        """Item assignment should write under the item key"""
        storage = io.TextDirectoryStorage(tmp_path)
        storage['trace'] = 'step 0 | dense D_0 | add {P(c1)} | witness m1\n'
        storage['sigma'] = text
        assert storage.keys() == ['sigma', 'trace']

    @staticmethod
    def test_read_missing(tmp_path):
        """Reading a key which does not exist should raise NoDataSource"""
        storage = io.TextDirectoryStorage(tmp_path)
        with pytest.raises(io.NoDataSource):
            _ = storage['model']

    @staticmethod
    def test_truthy(tmp_path):
        """A storage with a directory should be truthy"""
        assert io.TextDirectoryStorage(tmp_path)


def test_no_storage(text):
    """Test NoStorage instance that raises error when reading and writing.

    """
    data_storage = io.NoStorage()
    assert not data_storage
    with pytest.raises(io.NoDataSource):
        data_storage.read()
    with pytest.raises(io.NoDataTarget):
        data_storage.write(text)
    with pytest.raises(io.NoDataSource):
        data_storage.keys()
