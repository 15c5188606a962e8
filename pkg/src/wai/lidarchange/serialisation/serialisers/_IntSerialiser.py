from typing import IO

import numpy as np

from .._Serialiser import Serialiser, read_exactly


class IntSerialiser(Serialiser[int]):
    """
    Fixed-width integers of configurable size, sign and endianness.
    """
    def __init__(self,
                 little_endian: bool = True,
                 num_bytes: int = 4,
                 signed: bool = True):
        if num_bytes < 1:
            raise ValueError("num_bytes must be at least 1")

        self._endianness: str = "little" if little_endian else "big"
        self._num_bytes: int = num_bytes
        self._signed: bool = signed

    def _check(self, obj: int):
        if isinstance(obj, bool) or not isinstance(obj, (int, np.integer)):
            raise TypeError(f"IntSerialiser expects ints, got {type(obj)}")

        # Raises OverflowError if it doesn't fit
        int(obj).to_bytes(self._num_bytes, self._endianness, signed=self._signed)

    def _serialise(self, obj: int, stream: IO[bytes]):
        stream.write(int(obj).to_bytes(self._num_bytes, self._endianness, signed=self._signed))

    def _deserialise(self, stream: IO[bytes]) -> int:
        return int.from_bytes(read_exactly(stream, self._num_bytes), self._endianness, signed=self._signed)
