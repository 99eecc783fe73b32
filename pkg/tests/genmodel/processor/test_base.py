"""Test module for genmodel/processor/base.py"""
import logging
from collections import OrderedDict

import pytest

from genmodel.io import NoStorage, HashedMemory
from genmodel.processor.base import Processor, Param, FunctionProcessor, ensure_processor


@pytest.fixture(scope='module')
def processor_type():
    """Fixture Processor Subclass"""
    class StageProcessor(Processor):
        """Custom Processor"""
        label = Param(str, mandatory=True)
        limit = Param(int, 16, positional=True, identifier=True)
        order = Param((str, int), 'theory-first', identifier=True)
        value = 42

        def function(self, data):
            return data + self.limit

    return StageProcessor


@pytest.fixture(scope='module')
# pylint: disable=unused-argument
def kwargs(processor_type):
    """Fixture dict for valid Processor Param values"""
    kwargs = {
        'is_output': False,
        'is_checkpoint': False,
        'io': NoStorage(),
        'label': 'decide',
        'limit': 5,
        'order': 6,
    }
    return kwargs


@pytest.fixture(scope='module')
def function():
    """Fixture test function"""
    # pylint: disable=unused-argument
    def some_function(self, data):
        return 42
    return some_function


@pytest.fixture(scope='module')
def unbound_function():
    """Fixture unbound function"""
    def some_function(data):
        return data * 2
    return some_function


class TestProcessor:
    """Test class for Processor"""
    @staticmethod
    def test_params_tracked(processor_type):
        """Processors should have Params tracked correctly"""
        assert list(processor_type.collect(Param)) == ['is_output', 'is_checkpoint', 'io', 'label', 'limit', 'order']

    @staticmethod
    def test_instance_assign(processor_type, kwargs):
        """Parameter values passed as keyword arguments during instatiation should be properly set"""
        processor = processor_type(**kwargs)
        assert all(getattr(processor, key) == val for key, val in kwargs.items())

    @staticmethod
    def test_instance_default(processor_type):
        """Default values should be properly assigned"""
        assert processor_type(label='decide').limit == 16

    @staticmethod
    def test_instance_positional(processor_type):
        """Positional values should be properly assigned"""
        assert processor_type(44).limit == 44

    @staticmethod
    def test_too_many_positional(processor_type):
        """More positional arguments than positional Params should raise a TypeError"""
        with pytest.raises(TypeError):
            processor_type(44, 45)

    @staticmethod
    def test_positional_and_keyword(processor_type):
        """A Param given both positionally and as keyword should raise a TypeError"""
        with pytest.raises(TypeError):
            processor_type(44, limit=45)

    @staticmethod
    def test_unknown_param(processor_type):
        """Unknown parameters should raise an Exception"""
        with pytest.raises(TypeError):
            processor_type(label='decide', lable='decide')

    @staticmethod
    def test_abstract_func():
        """Processor should be abstract and thus fail to instantiate"""
        with pytest.raises(TypeError):
            Processor()

    @staticmethod
    def test_call(processor_type):
        """Calling a Processor should apply its function."""
        assert processor_type(label='decide', limit=3)(4) == 7

    @staticmethod
    def test_checkpoint(processor_type):
        """Checkpoints should store data"""
        processor = processor_type(label='decide', is_checkpoint=True)
        out = processor(0)
        assert processor.checkpoint_data == out

    @staticmethod
    def test_param_values(processor_type, kwargs):
        """Params should be correctly set in __init__"""
        processor = processor_type(**kwargs)
        assert processor.param_values() == kwargs

    @staticmethod
    def test_copy_param_values(processor_type, kwargs):
        """Copies should have identical Param values."""
        processor = processor_type(**kwargs)
        assert processor.param_values() == processor.copy().param_values()

    @staticmethod
    def test_identifiers(processor_type):
        """Identifiers should hold the class name and the identifying Params only."""
        processor = processor_type(label='decide', limit=3)
        assert processor.identifiers() == OrderedDict(
            name=processor_type.__qualname__, limit=3, order='theory-first'
        )

    @staticmethod
    def test_repr(processor_type):
        """The representation should list the set Params by name."""
        assert repr(processor_type(label='decide', limit=3)) == (
            "StageProcessor(label=decide, limit=3, order=theory-first)"
        )

    @staticmethod
    def test_mandatory_param(processor_type):
        """Mandatory parameters should raise an Exception when accessed without being set"""
        processor = processor_type()
        with pytest.raises(TypeError):
            # pylint: disable=pointless-statement
            processor.label

    @staticmethod
    def test_wrong_type_param(processor_type):
        """Passing a value with wrong type should raise a TypeError"""
        with pytest.raises(TypeError):
            processor_type(label=2)

    @staticmethod
    def test_bad_dtype():
        """Dtype should strictly only accept types."""
        with pytest.raises(TypeError):
            # pylint: disable=unused-variable
            class BadProcessor(Processor):
                """Test class with wrong Param"""
                param = Param(2)

    @staticmethod
    def test_update_defaults(processor_type):
        """Parameter instance default values can be updated and reset"""
        proc = processor_type(label='decide')
        proc.update_defaults(limit=1)
        assert proc.limit == 1
        proc.reset_defaults()
        assert proc.limit == 16

    @staticmethod
    def test_update_defaults_wrong_dtype(processor_type):
        """Updating Param default values with the wrong type should raise a TypeError"""
        proc = processor_type(label='decide')
        with pytest.raises(TypeError):
            proc.update_defaults(limit='bogus')


class TestMemoization:
    """Test class for Processors reading and writing their outputs through a storage"""
    @staticmethod
    def test_memoized():
        """A second call with the same input and identifiers should be read from the storage."""
        calls = []

        class CountingProcessor(Processor):
            """Counts its applications"""
            offset = Param(int, 0, identifier=True)

            def function(self, data):
                calls.append(data)
                return data + self.offset

        memory = HashedMemory()
        processor = CountingProcessor(offset=2, io=memory)
        assert processor(1) == 3
        assert processor(1) == 3
        assert calls == [1]
        assert len(memory) == 1

    @staticmethod
    def test_identifier_changes_key():
        """Changing an identifying Param should not reuse the stored output."""
        calls = []

        class CountingProcessor(Processor):
            """Counts its applications"""
            offset = Param(int, 0, identifier=True)

            def function(self, data):
                calls.append(data)
                return data + self.offset

        memory = HashedMemory()
        CountingProcessor(offset=2, io=memory)(1)
        assert CountingProcessor(offset=5, io=memory)(1) == 6
        assert calls == [1, 1]

    @staticmethod
    def test_unhashable_input(caplog):
        """Inputs which cannot be pickled should be computed every time, with a warning."""
        memory = HashedMemory()
        processor = FunctionProcessor(lambda data: 7, io=memory)
        with caplog.at_level(logging.WARNING):
            assert processor(x for x in range(3)) == 7
        assert len(memory) == 0
        assert 'output not stored' in caplog.text


class TestFunctionProcessor:
    """Test class for FunctionProcessor"""
    @staticmethod
    def test_instance_call(unbound_function):
        """Calling an instance should be the same result as calling the function"""
        processor = FunctionProcessor(function=unbound_function)
        assert processor(3) == unbound_function(3)

    @staticmethod
    def test_instance_call_positional(unbound_function):
        """Calling an instance should be the same result as calling the function when given function positionally"""
        assert FunctionProcessor(unbound_function)(3) == 6

    @staticmethod
    def test_instance_call_bound(function):
        """Calling a bound method should behave correctly"""
        processor = FunctionProcessor(function=function, bind_method=True)
        assert processor(0) == function(processor, 0)

    @staticmethod
    def test_default_identity():
        """Without a function, the FunctionProcessor should return its input."""
        assert FunctionProcessor()('sigma') == 'sigma'

    @staticmethod
    def test_non_callable():
        """Passing a non-callable as a function should raise a TypeError"""
        with pytest.raises(TypeError):
            FunctionProcessor(function='refine')


class TestEnsureProcessor:
    """Test class for ensure_processor"""
    @staticmethod
    def test_processor(processor_type):
        """Passing an existing Processor should not create a new one."""
        processor = processor_type(label='decide')
        assert ensure_processor(processor) is processor

    @staticmethod
    def test_function(unbound_function):
        """Passing a function should create a FunctionProcessor"""
        assert isinstance(ensure_processor(unbound_function), FunctionProcessor)

    @staticmethod
    def test_invalid():
        """Passing anything but a callable or Processor should raise a TypeError"""
        with pytest.raises(TypeError):
            ensure_processor('decide')

    @staticmethod
    def test_default_param_omitted(processor_type):
        """Passing a Param value should set its default"""
        ensured = ensure_processor(processor_type(label='decide'), is_output=True)
        assert ensured.is_output

    @staticmethod
    def test_default_param_assigned(processor_type):
        """Passing a Param value should have lower priority than the explicitly set Param value"""
        ensured = ensure_processor(processor_type(label='decide', is_output=False), is_output=True)
        assert not ensured.is_output
