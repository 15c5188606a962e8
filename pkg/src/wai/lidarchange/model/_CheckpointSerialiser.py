from typing import IO

import numpy as np
import torch

from ..serialisation import Serialiser, read_exactly
from ..serialisation.serialisers import (
    ArraySerialiser,
    DictSerialiser,
    IntSerialiser,
    ListSerialiser,
    StringSerialiser,
    TupleSerialiser
)
from ._ChangeModel import ChangeModel
from ._error import CheckpointFormatError
from ._ModelConfig import ModelConfig

# Leading bytes of every checkpoint
CHECKPOINT_MAGIC = b"LCDM"

# Current layout version
CHECKPOINT_VERSION = 1

# Header key holding the initialisation seed
SEED_KEY = "seed"


class CheckpointSerialiser(Serialiser[ChangeModel]):
    """
    Model checkpoints. Layout (little-endian throughout):

        magic       4 bytes, b"LCDM"
        version     uint16
        header      uint32 count, then (string key, string value) pairs:
                    the ModelConfig fields plus the seed
        tensors     uint32 count, then (string name, array) pairs, where an
                    array is its type string ('<f4' or '<f8'), its shape
                    (uint32 count + uint32 sizes) and its raw bytes

    Strings are a uint32 byte-length followed by UTF-8 bytes.
    """
    def __init__(self):
        self._version_serialiser = IntSerialiser(num_bytes=2, signed=False)
        self._header_serialiser = DictSerialiser(StringSerialiser(), StringSerialiser())
        self._tensors_serialiser = ListSerialiser(TupleSerialiser(StringSerialiser(), ArraySerialiser()))

    def _check(self, obj: ChangeModel):
        if not isinstance(obj, ChangeModel):
            raise TypeError(f"CheckpointSerialiser serialises ChangeModels, got {type(obj)}")

    def _serialise(self, obj: ChangeModel, stream: IO[bytes]):
        stream.write(CHECKPOINT_MAGIC)
        self._version_serialiser.serialise(CHECKPOINT_VERSION, stream)

        header = obj.config.to_dict()
        header[SEED_KEY] = str(obj.seed)
        self._header_serialiser.serialise(header, stream)

        tensors = [(name, tensor.detach().cpu().numpy()) for name, tensor in obj.state_dict().items()]
        self._tensors_serialiser.serialise(tensors, stream)

    def _deserialise(self, stream: IO[bytes]) -> ChangeModel:
        magic = read_exactly(stream, len(CHECKPOINT_MAGIC))
        if magic != CHECKPOINT_MAGIC:
            raise CheckpointFormatError(f"Not a model checkpoint (magic {magic!r})")

        version = self._version_serialiser.deserialise(stream)
        if version != CHECKPOINT_VERSION:
            raise CheckpointFormatError(f"Unsupported checkpoint version {version}")

        header = self._header_serialiser.deserialise(stream)
        seed = int(header.pop(SEED_KEY))
        model = ChangeModel(ModelConfig.from_dict(header), seed)

        stored = dict(self._tensors_serialiser.deserialise(stream))
        expected = model.state_dict()
        if set(stored) != set(expected):
            raise CheckpointFormatError(f"Checkpoint tensors {sorted(stored)} don't match the "
                                        f"architecture's {sorted(expected)}")

        for name, tensor in expected.items():
            if stored[name].shape != tuple(tensor.shape):
                raise CheckpointFormatError(f"Tensor '{name}' has shape {stored[name].shape}, "
                                            f"expected {tuple(tensor.shape)}")

        model.load_state_dict({name: torch.as_tensor(np.array(array), dtype=model.config.torch_dtype)
                               for name, array in stored.items()})

        return model
