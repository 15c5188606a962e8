import math

from ..geometry import Polyline


class Corridor:
    """
    The area a local planner cares about: within width/2 of the taught
    path (laterally) and within range_limit of the sensor. Either may be
    infinite.
    """
    def __init__(self, path: Polyline, width: float = 5.0, range_limit: float = 10.0):
        if not width > 0.0 or math.isnan(width):
            raise ValueError(f"Corridor width must be positive, got {width}")

        if not range_limit > 0.0 or math.isnan(range_limit):
            raise ValueError(f"Range limit must be positive, got {range_limit}")

        self.path: Polyline = path
        self.width: float = float(width)
        self.range_limit: float = float(range_limit)

    def __repr__(self):
        return f"Corridor(width={self.width}, range_limit={self.range_limit})"
