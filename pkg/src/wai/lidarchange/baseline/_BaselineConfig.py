class BaselineConfig:
    """
    Settings of the nearest-neighbour detector.

    :param distance_threshold:  Distance to the map (metres) above which a
                                point is Changed.
    """
    def __init__(self, distance_threshold: float = 0.3):
        if not distance_threshold > 0.0:
            raise ValueError(f"Distance threshold must be positive, got {distance_threshold}")

        self.distance_threshold: float = float(distance_threshold)

    def __eq__(self, other):
        return isinstance(other, BaselineConfig) and self.distance_threshold == other.distance_threshold

    def __repr__(self):
        return f"BaselineConfig(distance_threshold={self.distance_threshold})"
