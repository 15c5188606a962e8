class InvalidStateError(Exception):
    """
    Exception indicating an object was used while in the wrong state,
    e.g. asking a model to back-propagate without a retained forward pass.
    """
    pass
