from typing import IO

from .._Serialiser import Serialiser, read_exactly
from ._IntSerialiser import IntSerialiser


class StringSerialiser(Serialiser[str]):
    """
    Strings, serialised as their encoded byte-length followed by the bytes.
    """
    def __init__(self,
                 encoding: str = "utf-8",
                 length_serialiser: Serialiser[int] = IntSerialiser(signed=False)):
        self._encoding: str = encoding
        self._length_serialiser: Serialiser[int] = length_serialiser

    def _check(self, obj: str):
        if not isinstance(obj, str):
            raise TypeError(f"StringSerialiser serialises strings, got {type(obj)}")

    def _serialise(self, obj: str, stream: IO[bytes]):
        encoded: bytes = obj.encode(self._encoding)
        self._length_serialiser.serialise(len(encoded), stream)
        stream.write(encoded)

    def _deserialise(self, stream: IO[bytes]) -> str:
        byte_length: int = self._length_serialiser.deserialise(stream)
        return read_exactly(stream, byte_length).decode(self._encoding)
