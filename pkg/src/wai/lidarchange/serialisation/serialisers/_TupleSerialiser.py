from typing import Tuple, IO, Any

from .._Serialiser import Serialiser


class TupleSerialiser(Serialiser[Tuple]):
    """
    Fixed-length heterogeneous tuples, one serialiser per position.
    """
    def __init__(self, *element_serialisers: Serialiser):
        self._element_serialisers: Tuple[Serialiser, ...] = element_serialisers

    def _check(self, obj: Tuple):
        if not isinstance(obj, tuple):
            raise TypeError(f"{type(self).__name__} serialises tuples, got {type(obj)}")

        if len(obj) != len(self._element_serialisers):
            raise ValueError(f"Expected a tuple of length {len(self._element_serialisers)}, got {len(obj)}")

    def _serialise(self, obj: Tuple, stream: IO[bytes]):
        for element, serialiser in zip(obj, self._element_serialisers):
            serialiser.serialise(element, stream)

    def _deserialise(self, stream: IO[bytes]) -> Tuple[Any, ...]:
        return tuple(serialiser.deserialise(stream) for serialiser in self._element_serialisers)
