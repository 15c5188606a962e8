from typing import Dict, Sequence

import numpy as np

from ._Shape import format_vector, parse_vector, MIN_HIT_DISTANCE


class VegetationPatch:
    """
    A rectangular area of clutter: small spheres scattered at a given
    density, standing in for bushes and grass. On every repeat scan each
    sphere is displaced by isotropic Gaussian jitter, giving small
    changes that are irrelevant for planning.

    :param centre:          Centre (x, y) of the patch, in metres.
    :param size:            Extent (x, y) of the patch, in metres.
    :param density:         Clutter elements per square metre.
    :param jitter:          Standard deviation of the per-scan displacement, in metres.
    :param element_radius:  Radius of each element, in metres.
    :param height:          Maximum height of the element centres above the ground.
    """
    def __init__(self,
                 centre: Sequence[float],
                 size: Sequence[float],
                 density: float = 2.0,
                 jitter: float = 0.05,
                 element_radius: float = 0.15,
                 height: float = 0.8):
        centre = np.array(centre, dtype=np.float64).reshape(-1)
        size = np.array(size, dtype=np.float64).reshape(-1)

        if centre.shape != (2,) or size.shape != (2,):
            raise ValueError(f"Patch centre and size need 2 values each, got {centre.shape} and {size.shape}")

        if not np.all(size > 0.0):
            raise ValueError(f"Patch extent must be positive, got {size}")

        if density < 0.0:
            raise ValueError(f"Clutter density must be non-negative, got {density}")

        if jitter < 0.0:
            raise ValueError(f"Jitter must be non-negative, got {jitter}")

        if not element_radius > 0.0 or height < element_radius:
            raise ValueError(f"Need 0 < element_radius <= height, got {element_radius} and {height}")

        self.centre: np.ndarray = centre
        self.size: np.ndarray = size
        self.density: float = float(density)
        self.jitter: float = float(jitter)
        self.element_radius: float = float(element_radius)
        self.height: float = float(height)

    @property
    def element_count(self) -> int:
        return int(round(self.density * float(np.prod(self.size))))

    def sample_elements(self, rng: np.random.Generator) -> np.ndarray:
        """
        Draws the resting positions of the patch's elements.

        :param rng:     The random source.
        :return:        (k, 3) sphere centres.
        """
        count = self.element_count
        planar = self.centre + (rng.random((count, 2)) - 0.5) * self.size
        heights = rng.uniform(self.element_radius, self.height, count)
        return np.column_stack((planar, heights))

    def jittered(self, elements: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """
        Displaces resting element positions for one repeat scan.
        """
        if self.jitter == 0.0:
            return elements.copy()
        return elements + rng.normal(0.0, self.jitter, elements.shape)

    def intersect(self, elements: np.ndarray, origin: np.ndarray, directions: np.ndarray) -> np.ndarray:
        """
        Intersects rays with the patch's spheres at the given positions.

        :param elements:    (k, 3) sphere centres.
        :param origin:      The (3,) origin shared by all rays.
        :param directions:  (n, 3) unit ray directions.
        :return:            (n,) distance to the first hit, inf where missed.
        """
        directions = np.asarray(directions, dtype=np.float64)
        nearest = np.full(len(directions), np.inf)

        for centre in elements:
            offset = np.asarray(origin, dtype=np.float64) - centre
            b = directions @ offset
            c = offset @ offset - self.element_radius * self.element_radius
            discriminant = b * b - c
            with np.errstate(invalid="ignore"):
                t = -b - np.sqrt(discriminant)
            t = np.where((discriminant >= 0.0) & (t > MIN_HIT_DISTANCE), t, np.inf)
            np.minimum(nearest, t, out=nearest)

        return nearest

    def to_properties(self, prefix: str) -> Dict[str, str]:
        return {
            f"{prefix}.centre": format_vector(self.centre),
            f"{prefix}.size": format_vector(self.size),
            f"{prefix}.density": repr(self.density),
            f"{prefix}.jitter": repr(self.jitter),
            f"{prefix}.element_radius": repr(self.element_radius),
            f"{prefix}.height": repr(self.height),
        }

    @classmethod
    def from_properties(cls, properties: Dict[str, str], prefix: str) -> "VegetationPatch":
        return VegetationPatch(parse_vector(properties[f"{prefix}.centre"], 2),
                               parse_vector(properties[f"{prefix}.size"], 2),
                               float(properties[f"{prefix}.density"]),
                               float(properties[f"{prefix}.jitter"]),
                               float(properties[f"{prefix}.element_radius"]),
                               float(properties[f"{prefix}.height"]))

    def __eq__(self, other):
        return isinstance(other, VegetationPatch) and self.to_properties("") == other.to_properties("")
