from ..decorator import ensure_error_type
from ._ChangeModel import ChangeModel
from ._CheckpointSerialiser import CheckpointSerialiser, CHECKPOINT_MAGIC, CHECKPOINT_VERSION
from ._error import CheckpointFormatError


def save_checkpoint(model: ChangeModel, filename: str):
    """
    Writes a model checkpoint.

    :param model:       The model.
    :param filename:    The file to write.
    """
    CheckpointSerialiser().serialise_to_file(model, filename)


@ensure_error_type(CheckpointFormatError, "Couldn't load checkpoint '{filename}': {0}")
def load_checkpoint(filename: str) -> ChangeModel:
    """
    Reads a model checkpoint.

    :param filename:    The file to read.
    :return:            The model, with the stored parameters.
    """
    return CheckpointSerialiser().deserialise_from_file(filename)
