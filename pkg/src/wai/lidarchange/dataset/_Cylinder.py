from typing import Dict, Sequence

import numpy as np

from ._Shape import Shape, format_vector, parse_vector, nearest_hit


class Cylinder(Shape):
    """
    A vertical cylinder standing on the ground.

    :param centre:  Axis position (x, y) in metres.
    :param radius:  Radius in metres.
    :param height:  Height of the top cap above the ground.
    """
    def __init__(self, centre: Sequence[float], radius: float, height: float):
        centre = np.array(centre, dtype=np.float64).reshape(-1)

        if centre.shape != (2,):
            raise ValueError(f"Cylinder centre needs 2 values, got {centre.shape}")

        if not radius > 0.0 or not height > 0.0:
            raise ValueError(f"Cylinder radius and height must be positive, got {radius} and {height}")

        self.centre: np.ndarray = centre
        self.radius: float = float(radius)
        self.height: float = float(height)

    def intersect(self, origin: np.ndarray, directions: np.ndarray) -> np.ndarray:
        origin = np.asarray(origin, dtype=np.float64)
        directions = np.asarray(directions, dtype=np.float64)
        offset = origin[:2] - self.centre
        dx, dy, dz = directions[:, 0], directions[:, 1], directions[:, 2]

        # Side wall: |o + t d|_xy = r
        a = dx * dx + dy * dy
        b = 2.0 * (offset[0] * dx + offset[1] * dy)
        c = offset @ offset - self.radius * self.radius
        discriminant = b * b - 4.0 * a * c
        with np.errstate(divide="ignore", invalid="ignore"):
            t_side = (-b - np.sqrt(discriminant)) / (2.0 * a)
        z_side = origin[2] + t_side * dz
        t_side = np.where((a > 0.0) & (discriminant >= 0.0) & (z_side >= 0.0) & (z_side <= self.height),
                          t_side, np.inf)

        # Top cap
        with np.errstate(divide="ignore", invalid="ignore"):
            t_top = (self.height - origin[2]) / dz
        top_x = offset[0] + t_top * dx
        top_y = offset[1] + t_top * dy
        t_top = np.where((dz != 0.0) & (top_x * top_x + top_y * top_y <= self.radius * self.radius),
                         t_top, np.inf)

        return nearest_hit(t_side, t_top)

    def contains(self, points: np.ndarray, margin: float = 0.0) -> np.ndarray:
        """
        Whether each of an (n, 3) array of points lies within the cylinder
        grown by a margin.
        """
        points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
        planar = np.sqrt(np.sum((points[:, :2] - self.centre) ** 2, axis=1))
        return (planar <= self.radius + margin) & (points[:, 2] >= -margin) & (points[:, 2] <= self.height + margin)

    def to_properties(self, prefix: str) -> Dict[str, str]:
        return {
            f"{prefix}.centre": format_vector(self.centre),
            f"{prefix}.radius": repr(self.radius),
            f"{prefix}.height": repr(self.height),
        }

    @classmethod
    def from_properties(cls, properties: Dict[str, str], prefix: str) -> "Cylinder":
        return Cylinder(parse_vector(properties[f"{prefix}.centre"], 2),
                        float(properties[f"{prefix}.radius"]),
                        float(properties[f"{prefix}.height"]))

    def __eq__(self, other):
        return (isinstance(other, Cylinder) and np.array_equal(self.centre, other.centre)
                and self.radius == other.radius and self.height == other.height)

    def __repr__(self):
        return f"Cylinder(centre={self.centre.tolist()}, radius={self.radius}, height={self.height})"
