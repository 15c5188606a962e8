import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, ExceptionTest

from wai.lidarchange.serialisation.serialisers import (
    ArraySerialiser,
    DictSerialiser,
    IntSerialiser,
    ListSerialiser,
    StringSerialiser,
    TupleSerialiser
)


class SerialisationTest(AbstractTest):
    @classmethod
    def subject_type(cls):
        return ListSerialiser

    @classmethod
    def common_arguments(cls):
        return (TupleSerialiser(StringSerialiser(), ArraySerialiser()),), {}

    @Test
    def named_arrays(self, subject: ListSerialiser):
        tensors = [("weight", np.arange(6, dtype=np.float32).reshape(2, 3)), ("bias", np.zeros(0))]
        loaded = subject.deserialise_from_bytes(subject.serialise_to_bytes(tensors))

        self.assertEqual([name for name, _ in loaded], ["weight", "bias"])
        for (_, expected), (_, actual) in zip(tensors, loaded):
            self.assertEqual(actual.dtype, expected.dtype)
            np.testing.assert_array_equal(actual, expected)

    @Test
    def little_endian_uint16(self, subject: ListSerialiser):
        self.assertEqual(IntSerialiser(num_bytes=2, signed=False).serialise_to_bytes(258), b"\x02\x01")

    @Test
    def string_dict(self, subject: ListSerialiser):
        serialiser = DictSerialiser(StringSerialiser(), StringSerialiser())
        values = {"height": "32", "width": "256", "note": "ümlaut"}
        self.assertEqual(serialiser.deserialise_from_bytes(serialiser.serialise_to_bytes(values)), values)

    @ExceptionTest(OverflowError)
    def int_out_of_range(self, subject: ListSerialiser):
        IntSerialiser(num_bytes=1, signed=False).serialise_to_bytes(256)

    @ExceptionTest(EOFError)
    def truncated_stream(self, subject: ListSerialiser):
        StringSerialiser().deserialise_from_bytes(b"\x05\x00\x00\x00ab")
