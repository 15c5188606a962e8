"""
Spherical projection of point clouds into range images, and the mapping
from image pixels back to the points they came from.
"""
from ._functions import (
    project_point,
    project_points,
    pixel_indices,
    render,
    backproject,
    backproject_labels,
    scatter_to_pixels,
    EMPTY_RANGE,
    EMPTY_INDEX
)
from ._ProjectionConfig import ProjectionConfig
from ._RangeImage import RangeImage
