from abc import ABC, abstractmethod
from typing import Dict, Sequence, Tuple

import numpy as np

# Nearest accepted ray parameter; hits closer than this are ignored
MIN_HIT_DISTANCE = 1e-9


class Shape(ABC):
    """
    Base class for the solid scene elements the sensor simulator casts
    rays against. Shapes are in the world frame, z up, ground at z = 0.
    """
    @abstractmethod
    def intersect(self, origin: np.ndarray, directions: np.ndarray) -> np.ndarray:
        """
        Intersects rays with the shape's surface.

        :param origin:      The (3,) origin shared by all rays.
        :param directions:  (n, 3) unit ray directions.
        :return:            (n,) distance to the first hit, inf where missed.
        """
        pass

    @abstractmethod
    def to_properties(self, prefix: str) -> Dict[str, str]:
        """
        Encodes the shape as properties under a key prefix.
        """
        pass

    @classmethod
    @abstractmethod
    def from_properties(cls, properties: Dict[str, str], prefix: str) -> "Shape":
        """
        Decodes a shape written by to_properties.
        """
        pass


def format_vector(values: Sequence[float]) -> str:
    return ",".join(repr(float(value)) for value in values)


def parse_vector(value: str, size: int) -> Tuple[float, ...]:
    values = tuple(float(part) for part in value.split(","))
    if len(values) != size:
        raise ValueError(f"Expected {size} comma-separated values, got '{value}'")
    return values


def nearest_hit(*candidates: np.ndarray) -> np.ndarray:
    """
    Combines candidate hit distances, keeping the nearest valid one per ray.
    """
    stacked = np.stack(candidates)
    stacked = np.where(stacked > MIN_HIT_DISTANCE, stacked, np.inf)
    return np.min(stacked, axis=0)
