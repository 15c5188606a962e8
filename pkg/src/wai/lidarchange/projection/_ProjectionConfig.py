import math
from typing import Dict


class ProjectionConfig:
    """
    Geometry of the range image: raster size, vertical field of view
    (degrees, 'fov_down' of it below the horizon) and the maximum range
    of points that are rendered. Azimuth always spans 360°.
    """
    def __init__(self,
                 height: int = 32,
                 width: int = 256,
                 fov: float = 25.0,
                 fov_down: float = 12.5,
                 max_range: float = 10.0):
        if int(height) != height or int(width) != width or height < 1 or width < 1:
            raise ValueError(f"Raster dimensions must be positive integers, got {height}x{width}")

        if not 0.0 < fov <= 180.0:
            raise ValueError(f"Field of view must be in (0, 180] degrees, got {fov}")

        if not 0.0 <= fov_down <= fov:
            raise ValueError(f"fov_down must be in [0, fov], got {fov_down}")

        if not max_range > 0.0:
            raise ValueError(f"Maximum range must be positive, got {max_range}")

        self.height: int = int(height)
        self.width: int = int(width)
        self.fov: float = float(fov)
        self.fov_down: float = float(fov_down)
        self.max_range: float = float(max_range)

    @property
    def shape(self):
        return self.height, self.width

    @property
    def fov_radians(self) -> float:
        return math.radians(self.fov)

    @property
    def fov_down_radians(self) -> float:
        return math.radians(self.fov_down)

    def pixel_centre_angles(self, row: float, column: float):
        """
        Gets the elevation and azimuth (radians) that project to the centre
        of a pixel. Used by the sensor simulator to cast one ray per pixel.

        :param row:     The pixel row (may be an array).
        :param column:  The pixel column (may be an array).
        :return:        Elevation and azimuth.
        """
        v = row + 0.5
        u = column + 0.5
        elevation = (1.0 - v / self.height) * self.fov_radians - self.fov_down_radians
        azimuth = (1.0 - 2.0 * u / self.width) * math.pi
        return elevation, azimuth

    def to_dict(self) -> Dict[str, str]:
        return {
            "height": str(self.height),
            "width": str(self.width),
            "fov": repr(self.fov),
            "fov_down": repr(self.fov_down),
            "max_range": repr(self.max_range),
        }

    @classmethod
    def from_dict(cls, values: Dict[str, str]) -> "ProjectionConfig":
        return ProjectionConfig(int(values["height"]), int(values["width"]), float(values["fov"]),
                                float(values["fov_down"]), float(values["max_range"]))

    def __eq__(self, other):
        return isinstance(other, ProjectionConfig) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return (f"ProjectionConfig(height={self.height}, width={self.width}, fov={self.fov}, "
                f"fov_down={self.fov_down}, max_range={self.max_range})")
