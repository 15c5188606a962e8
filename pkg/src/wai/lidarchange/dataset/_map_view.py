import numpy as np

from ..geometry import PointCloud, RigidTransform, SENSOR_FRAME, transform
from ..projection import ProjectionConfig

# Extra radius of the map view beyond the maximum range, in metres
MAP_VIEW_MARGIN = 1.0


def map_view_radius(projection: ProjectionConfig) -> float:
    return projection.max_range + MAP_VIEW_MARGIN


def crop_map(world_map: PointCloud, pose: RigidTransform, radius: float) -> PointCloud:
    """
    Gets the part of the world map within a radius of the sensor,
    expressed in the sensor frame.

    :param world_map:   The map, in the world frame.
    :param pose:        The sensor pose.
    :param radius:      The crop radius, in metres.
    :return:            The map view.
    """
    offsets = world_map.positions - pose.translation
    inside = np.flatnonzero(np.sum(offsets * offsets, axis=1) <= radius * radius)
    return transform(world_map.subset(inside), pose.inverse(), SENSOR_FRAME)
