class PlyFormatError(ValueError):
    """
    Raised when a PLY file can't be understood.
    """
    pass
