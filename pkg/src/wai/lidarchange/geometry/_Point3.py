import math
from typing import Iterator

import numpy as np


class Point3:
    """
    Represents an (x, y, z) coordinate in metres.
    """
    __slots__ = ("x", "y", "z")

    def __init__(self, x: float, y: float, z: float):
        if not all(math.isfinite(value) for value in (x, y, z)):
            raise ValueError(f"Point coordinates must be finite, got ({x}, {y}, {z})")

        self.x: float = float(x)
        self.y: float = float(y)
        self.z: float = float(z)

    def __iter__(self) -> Iterator[float]:
        return iter((self.x, self.y, self.z))

    def __str__(self):
        return f"({self.x}, {self.y}, {self.z})"

    def __repr__(self):
        return f"Point3({self.x!r}, {self.y!r}, {self.z!r})"

    def __eq__(self, other):
        return isinstance(other, Point3) and tuple(self) == tuple(other)

    def __hash__(self):
        return hash(tuple(self))

    def norm(self) -> float:
        """
        The distance of this point from the origin.
        """
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def as_array(self) -> np.ndarray:
        """
        Gets the point as a float64 array of shape (3,).
        """
        return np.array((self.x, self.y, self.z), dtype=np.float64)
