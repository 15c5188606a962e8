"""
The change-detection network: a small encoder-decoder over stacked
(live, map) range images producing two class scores per pixel.
"""
from ._ChangeModel import ChangeModel
from ._checkpoint import save_checkpoint, load_checkpoint, CHECKPOINT_MAGIC, CHECKPOINT_VERSION
from ._CheckpointSerialiser import CheckpointSerialiser
from ._error import CheckpointFormatError
from ._functions import (
    forward,
    backward,
    discard_tape,
    predict_labels,
    parameter_count,
    EXACT_GRADIENT,
    NON_SATURATING_GRADIENT,
    GRADIENT_MODES
)
from ._ModelConfig import ModelConfig
from ._PixelLogits import PixelLogits
