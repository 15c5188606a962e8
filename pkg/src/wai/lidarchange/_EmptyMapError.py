class EmptyMapError(ValueError):
    """
    Raised when a nearest-neighbour query is made against a map
    which contains no points.
    """
    pass
