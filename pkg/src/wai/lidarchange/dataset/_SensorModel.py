from typing import Dict

import numpy as np

from ..projection import ProjectionConfig


class SensorModel:
    """
    An idealised spinning LiDAR: one ray through the centre of every pixel
    of 'projection', returns up to the projection's maximum range, with
    Gaussian range noise. The sensor is mounted 'height' metres above the
    ground.
    """
    def __init__(self,
                 projection: ProjectionConfig = ProjectionConfig(),
                 height: float = 1.0,
                 range_noise: float = 0.01):
        if not height > 0.0:
            raise ValueError(f"Sensor height must be positive, got {height}")

        if range_noise < 0.0:
            raise ValueError(f"Range noise must be non-negative, got {range_noise}")

        self.projection: ProjectionConfig = projection
        self.height: float = float(height)
        self.range_noise: float = float(range_noise)

    def ray_directions(self) -> np.ndarray:
        """
        Gets the unit ray directions in the sensor frame, in raster order.

        :return:    (H * W, 3) directions.
        """
        rows, columns = np.meshgrid(np.arange(self.projection.height),
                                    np.arange(self.projection.width),
                                    indexing="ij")
        elevation, azimuth = self.projection.pixel_centre_angles(rows.reshape(-1), columns.reshape(-1))
        return np.column_stack((np.cos(elevation) * np.cos(azimuth),
                                np.cos(elevation) * np.sin(azimuth),
                                np.sin(elevation)))

    def to_properties(self, prefix: str) -> Dict[str, str]:
        properties = {f"{prefix}.{key}": value for key, value in self.projection.to_dict().items()}
        properties[f"{prefix}.mount_height"] = repr(self.height)
        properties[f"{prefix}.range_noise"] = repr(self.range_noise)
        return properties

    @classmethod
    def from_properties(cls, properties: Dict[str, str], prefix: str) -> "SensorModel":
        defaults = ProjectionConfig().to_dict()
        projection = ProjectionConfig.from_dict({key: properties.get(f"{prefix}.{key}", default)
                                                 for key, default in defaults.items()})
        return SensorModel(projection,
                           float(properties.get(f"{prefix}.mount_height", "1.0")),
                           float(properties.get(f"{prefix}.range_noise", "0.01")))

    def __eq__(self, other):
        return isinstance(other, SensorModel) and self.to_properties("") == other.to_properties("")

    def __repr__(self):
        return f"SensorModel({self.projection!r}, height={self.height}, range_noise={self.range_noise})"
