from typing import Sequence

import numpy as np
from scipy.ndimage import binary_dilation

from ..geometry import PointCloud, RigidTransform
from ._CostMap import CostMap
from ._CostMapConfig import CostMapConfig

# Slack when comparing squared cell distances against the squared radius
DISC_TOLERANCE = 1e-9


def inflation_disc(robot_radius: float, cell_size: float) -> np.ndarray:
    """
    Gets the structuring element of all cell offsets (di, dj) with
    di^2 + dj^2 <= (robot_radius / cell_size)^2.
    """
    radius_cells = robot_radius / cell_size
    reach = int(np.floor(radius_cells + DISC_TOLERANCE))
    di, dj = np.ogrid[-reach:reach + 1, -reach:reach + 1]
    return di * di + dj * dj <= radius_cells * radius_cells + DISC_TOLERANCE


def inflate(changed_points: PointCloud,
            robot_radius: float,
            config: CostMapConfig = CostMapConfig(),
            origin: RigidTransform = RigidTransform.identity()) -> CostMap:
    """
    Builds a binary cost map: the cell of every changed point (projected
    to the ground plane) is occupied, as is every cell whose centre is
    within the robot's radius of an occupied cell's centre. Points outside
    the grid are ignored.

    :param changed_points:  The changed points, in the robot's frame.
    :param robot_radius:    The robot's radius, in metres.
    :param config:          The grid geometry.
    :param origin:          The robot's world pose.
    :return:                The cost map.
    """
    if not robot_radius > 0.0:
        raise ValueError(f"Robot radius must be positive, got {robot_radius}")

    cost_map = CostMap.empty(config, origin)
    if len(changed_points) == 0:
        return cost_map

    rows, columns, inside = cost_map.cell_of(changed_points.positions[:, :2])
    marked = np.zeros(config.shape, dtype=bool)
    marked[rows[inside], columns[inside]] = True

    inflated = binary_dilation(marked, structure=inflation_disc(robot_radius, config.cell_size))

    return CostMap(inflated.astype(np.float64), config, origin)


def queue_merge(queue: Sequence[CostMap], depth: int = 5) -> CostMap:
    """
    Merges the newest 'depth' cost maps of a queue (oldest first) into
    the newest map's frame by cellwise maximum. Each older map is
    re-registered by looking up, for every cell of the newest map, the
    older cell under its centre.

    :param queue:   The cost maps, oldest first.
    :param depth:   How many of the newest maps to merge.
    :return:        The merged map, in the newest map's frame.
    """
    if depth < 1:
        raise ValueError(f"Queue depth must be at least 1, got {depth}")

    if len(queue) == 0:
        raise ValueError("Can't merge an empty cost-map queue")

    newest = queue[-1]
    merged = newest.grid.copy()

    rows, columns = np.indices(newest.config.shape)
    world_centres = newest.local_to_world(newest.cell_centres(rows.reshape(-1), columns.reshape(-1)))

    for older in list(queue)[-depth:-1]:
        older_rows, older_columns, inside = older.cell_of(older.world_to_local(world_centres))
        values = np.zeros(len(world_centres))
        values[inside] = older.grid[older_rows[inside], older_columns[inside]]
        np.maximum(merged, values.reshape(newest.config.shape), out=merged)

    return CostMap(merged, newest.config, newest.origin)
