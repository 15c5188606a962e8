class CheckpointFormatError(ValueError):
    """
    Raised when a model checkpoint can't be read.
    """
    pass
