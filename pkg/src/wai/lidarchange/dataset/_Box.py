import math
from typing import Dict, Sequence

import numpy as np

from ._Shape import Shape, format_vector, parse_vector, MIN_HIT_DISTANCE


class Box(Shape):
    """
    A box rotated by 'yaw' about the vertical through its centre.

    :param centre:  Centre (x, y, z) in metres.
    :param size:    Edge lengths along the box's own x, y and z axes.
    :param yaw:     Heading of the box's x-axis, in radians.
    """
    def __init__(self, centre: Sequence[float], size: Sequence[float], yaw: float = 0.0):
        centre = np.array(centre, dtype=np.float64).reshape(-1)
        size = np.array(size, dtype=np.float64).reshape(-1)

        if centre.shape != (3,) or size.shape != (3,):
            raise ValueError(f"Box centre and size need 3 values each, got {centre.shape} and {size.shape}")

        if not np.all(size > 0.0):
            raise ValueError(f"Box edges must be positive, got {size}")

        self.centre: np.ndarray = centre
        self.size: np.ndarray = size
        self.yaw: float = float(yaw)

    def _rotation(self) -> np.ndarray:
        c, s = math.cos(self.yaw), math.sin(self.yaw)
        return np.array(((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0)))

    def intersect(self, origin: np.ndarray, directions: np.ndarray) -> np.ndarray:
        # Slab test in the box's own frame
        rotation = self._rotation()
        local_origin = (np.asarray(origin, dtype=np.float64) - self.centre) @ rotation
        local_directions = np.asarray(directions, dtype=np.float64) @ rotation
        half = self.size / 2.0

        with np.errstate(divide="ignore", invalid="ignore"):
            t_low = (-half - local_origin) / local_directions
            t_high = (half - local_origin) / local_directions

        parallel = local_directions == 0.0
        inside_slab = np.abs(local_origin) <= half
        t_near_axis = np.where(parallel, np.where(inside_slab, -np.inf, np.inf), np.minimum(t_low, t_high))
        t_far_axis = np.where(parallel, np.where(inside_slab, np.inf, -np.inf), np.maximum(t_low, t_high))

        t_near = np.max(t_near_axis, axis=1)
        t_far = np.min(t_far_axis, axis=1)

        # Rays starting inside the box are ignored
        hit = (t_near <= t_far) & (t_near > MIN_HIT_DISTANCE)
        return np.where(hit, t_near, np.inf)

    def contains(self, points: np.ndarray, margin: float = 0.0) -> np.ndarray:
        """
        Whether each of an (n, 3) array of points lies within the box
        grown by a margin.
        """
        local = (np.asarray(points, dtype=np.float64).reshape(-1, 3) - self.centre) @ self._rotation()
        return np.all(np.abs(local) <= self.size / 2.0 + margin, axis=1)

    def to_properties(self, prefix: str) -> Dict[str, str]:
        return {
            f"{prefix}.centre": format_vector(self.centre),
            f"{prefix}.size": format_vector(self.size),
            f"{prefix}.yaw": repr(self.yaw),
        }

    @classmethod
    def from_properties(cls, properties: Dict[str, str], prefix: str) -> "Box":
        return Box(parse_vector(properties[f"{prefix}.centre"], 3),
                   parse_vector(properties[f"{prefix}.size"], 3),
                   float(properties.get(f"{prefix}.yaw", "0.0")))

    def __eq__(self, other):
        return (isinstance(other, Box) and np.array_equal(self.centre, other.centre)
                and np.array_equal(self.size, other.size) and self.yaw == other.yaw)

    def __repr__(self):
        return f"Box(centre={self.centre.tolist()}, size={self.size.tolist()}, yaw={self.yaw})"
