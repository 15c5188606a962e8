from typing import IO

import numpy as np

from .._Serialiser import Serialiser, read_exactly
from ._IntSerialiser import IntSerialiser
from ._ListSerialiser import ListSerialiser
from ._StringSerialiser import StringSerialiser

# Element types that may be stored, by their little-endian type string
SUPPORTED_DTYPES = ("<f4", "<f8", "<i4", "<i8", "|u1")


class ArraySerialiser(Serialiser[np.ndarray]):
    """
    Numeric arrays, serialised as a type string, the shape (list of
    uint32) and the raw little-endian element bytes in C order.
    """
    def __init__(self):
        self._dtype_serialiser = StringSerialiser()
        self._shape_serialiser = ListSerialiser(IntSerialiser(signed=False))

    @staticmethod
    def _storage_dtype(array: np.ndarray) -> np.dtype:
        return array.dtype.newbyteorder("<") if array.dtype.itemsize > 1 else array.dtype

    def _check(self, obj: np.ndarray):
        if not isinstance(obj, np.ndarray):
            raise TypeError(f"ArraySerialiser serialises numpy arrays, got {type(obj)}")

        if self._storage_dtype(obj).str not in SUPPORTED_DTYPES:
            raise TypeError(f"Unsupported element type {obj.dtype}")

    def _serialise(self, obj: np.ndarray, stream: IO[bytes]):
        dtype = self._storage_dtype(obj)
        self._dtype_serialiser.serialise(dtype.str, stream)
        self._shape_serialiser.serialise(list(obj.shape), stream)
        stream.write(np.ascontiguousarray(obj, dtype=dtype).tobytes())

    def _deserialise(self, stream: IO[bytes]) -> np.ndarray:
        dtype_string = self._dtype_serialiser.deserialise(stream)
        if dtype_string not in SUPPORTED_DTYPES:
            raise ValueError(f"Unsupported stored element type '{dtype_string}'")

        dtype = np.dtype(dtype_string)
        shape = tuple(self._shape_serialiser.deserialise(stream))
        count = int(np.prod(shape, dtype=np.int64))
        data = read_exactly(stream, count * dtype.itemsize)

        return np.frombuffer(data, dtype=dtype).reshape(shape).astype(dtype.newbyteorder("="))
