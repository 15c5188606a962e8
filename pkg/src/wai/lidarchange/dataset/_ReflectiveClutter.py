from typing import Dict, Sequence, Tuple, Union

import numpy as np

from ._Box import Box
from ._ChangeObject import SHAPE_KINDS
from ._Cylinder import Cylinder
from ._Shape import format_vector, parse_vector


class ReflectiveClutter:
    """
    A static retro-reflective structure, such as a road sign. It is part
    of the taught map, but during the repeat pass some of its returns come
    back short (multipath ghosts): the point lands somewhere between the
    sensor and the true surface. Ghost points are not changes. The taught
    map is assumed to have been cleaned of them.

    :param shape:           The structure.
    :param ghost_rate:      Probability that a return from it is a ghost.
    :param ghost_fraction:  Range of the ghost's range as a fraction of the true range.
    """
    def __init__(self,
                 shape: Union[Box, Cylinder],
                 ghost_rate: float = 0.3,
                 ghost_fraction: Sequence[float] = (0.3, 0.8)):
        if not isinstance(shape, (Box, Cylinder)):
            raise TypeError(f"Clutter is a box or a cylinder, got {type(shape)}")

        if not 0.0 <= ghost_rate <= 1.0:
            raise ValueError(f"Ghost rate must be in [0, 1], got {ghost_rate}")

        low, high = (float(value) for value in ghost_fraction)
        if not 0.0 < low <= high < 1.0:
            raise ValueError(f"Ghost fractions must satisfy 0 < low <= high < 1, got {low}, {high}")

        self.shape: Union[Box, Cylinder] = shape
        self.ghost_rate: float = float(ghost_rate)
        self.ghost_fraction: Tuple[float, float] = (low, high)

    @property
    def kind(self) -> str:
        return "box" if isinstance(self.shape, Box) else "cylinder"

    def ghost_ranges(self, ranges: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """
        Turns some of the structure's returns into ghosts.

        :param ranges:  True ranges of the returns off the structure.
        :param rng:     The random source.
        :return:        The observed ranges.
        """
        ghosts = rng.random(len(ranges)) < self.ghost_rate
        fractions = rng.uniform(*self.ghost_fraction, int(np.sum(ghosts)))
        observed = np.array(ranges, dtype=np.float64)
        observed[ghosts] *= fractions
        return observed

    def to_properties(self, prefix: str) -> Dict[str, str]:
        properties = self.shape.to_properties(prefix)
        properties[f"{prefix}.shape"] = self.kind
        properties[f"{prefix}.ghost_rate"] = repr(self.ghost_rate)
        properties[f"{prefix}.ghost_fraction"] = format_vector(self.ghost_fraction)
        return properties

    @classmethod
    def from_properties(cls, properties: Dict[str, str], prefix: str) -> "ReflectiveClutter":
        kind = properties[f"{prefix}.shape"]
        if kind not in SHAPE_KINDS:
            raise ValueError(f"Unknown clutter shape '{kind}', expected one of {sorted(SHAPE_KINDS)}")

        return ReflectiveClutter(SHAPE_KINDS[kind].from_properties(properties, prefix),
                                 float(properties.get(f"{prefix}.ghost_rate", "0.3")),
                                 parse_vector(properties.get(f"{prefix}.ghost_fraction", "0.3,0.8"), 2))

    def __eq__(self, other):
        return isinstance(other, ReflectiveClutter) and self.to_properties("") == other.to_properties("")

    def __repr__(self):
        return f"ReflectiveClutter({self.shape!r}, ghost_rate={self.ghost_rate}, ghost_fraction={self.ghost_fraction})"
