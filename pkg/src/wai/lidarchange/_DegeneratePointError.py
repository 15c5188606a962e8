class DegeneratePointError(ValueError):
    """
    Raised when a point at the sensor origin (zero range) is projected
    into spherical coordinates.
    """
    pass
