from abc import abstractmethod
from io import BytesIO
from typing import Generic, TypeVar, IO

from ..file import ensure_directory

# The type of object the serialiser serialises/deserialises
ObjectType = TypeVar("ObjectType")


def read_exactly(stream: IO[bytes], num_bytes: int) -> bytes:
    """
    Reads a fixed number of bytes, failing on a truncated stream.

    :param stream:      The stream to read from.
    :param num_bytes:   The number of bytes required.
    :return:            The bytes.
    """
    data = stream.read(num_bytes)
    if len(data) != num_bytes:
        raise EOFError(f"Expected {num_bytes} bytes, stream ended after {len(data)}")
    return data


class Serialiser(Generic[ObjectType]):
    """
    Base class for objects which serialise other objects to/from a
    binary representation.
    """
    @abstractmethod
    def _check(self, obj: ObjectType):
        """
        Checks the object is suitable for serialisation.

        :param obj:             The object to check.
        :raises Exception:      If the object is not suitable for serialisation.
        """
        pass

    @abstractmethod
    def _serialise(self, obj: ObjectType, stream: IO[bytes]):
        """
        Writes the (checked) object to the stream.
        """
        pass

    @abstractmethod
    def _deserialise(self, stream: IO[bytes]) -> ObjectType:
        """
        Reads an object from the stream.
        """
        pass

    def serialise(self, obj: ObjectType, stream: IO[bytes]):
        self._check(obj)
        self._serialise(obj, stream)

    def deserialise(self, stream: IO[bytes]) -> ObjectType:
        return self._deserialise(stream)

    def serialise_to_file(self, obj: ObjectType, filename: str):
        ensure_directory(filename)
        with open(filename, 'wb') as file:
            self.serialise(obj, file)

    def deserialise_from_file(self, filename: str) -> ObjectType:
        with open(filename, 'rb') as file:
            return self.deserialise(file)

    def serialise_to_bytes(self, obj: ObjectType) -> bytes:
        stream = BytesIO()
        self.serialise(obj, stream)
        return stream.getvalue()

    def deserialise_from_bytes(self, data: bytes) -> ObjectType:
        return self.deserialise(BytesIO(data))
