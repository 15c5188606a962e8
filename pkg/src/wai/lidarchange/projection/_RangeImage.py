import numpy as np

from ._ProjectionConfig import ProjectionConfig


class RangeImage:
    """
    A rendered range raster plus the two-way mapping to its point cloud.

    ranges:         (H, W) metres of the closest point in each pixel, 0 if empty.
    index_map:      (H, W) index of that point, -1 if empty.
    pixel_of_point: (n,) flat pixel index each point projects into, -1 if
                    it falls outside the vertical field of view.
    """
    def __init__(self,
                 ranges: np.ndarray,
                 index_map: np.ndarray,
                 pixel_of_point: np.ndarray,
                 config: ProjectionConfig):
        if ranges.shape != config.shape or index_map.shape != config.shape:
            raise ValueError(f"Rasters must have shape {config.shape}")

        self.ranges: np.ndarray = ranges
        self.index_map: np.ndarray = index_map
        self.pixel_of_point: np.ndarray = pixel_of_point
        self.config: ProjectionConfig = config

    @property
    def shape(self):
        return self.ranges.shape

    @property
    def point_count(self) -> int:
        return len(self.pixel_of_point)

    @property
    def populated(self) -> np.ndarray:
        """
        Boolean (H, W) mask of pixels holding a point.
        """
        return self.index_map >= 0

    def normalised(self) -> np.ndarray:
        """
        Gets the ranges divided by the maximum range (empty pixels stay 0).
        """
        return self.ranges / self.config.max_range
