from typing import Dict, Iterable

import numpy as np

from .._Label import LABEL_DTYPE
from ..geometry import PointCloud, SpatialIndex
from ._BaselineConfig import BaselineConfig


def nn_distances(cloud: PointCloud, map_index: SpatialIndex) -> np.ndarray:
    """
    Gets the distance from every point of a cloud to its nearest map point.
    """
    distances, _ = map_index.nearest_many(cloud.positions)
    return distances


def nn_classify(cloud: PointCloud,
                map_index: SpatialIndex,
                config: BaselineConfig = BaselineConfig()) -> np.ndarray:
    """
    Labels each point Changed iff its nearest map point is further away
    than the configured threshold.

    :param cloud:       The live scan.
    :param map_index:   Index over the map, in the scan's frame.
    :param config:      The detector settings.
    :return:            The per-point labels.
    """
    return (nn_distances(cloud, map_index) > config.distance_threshold).astype(LABEL_DTYPE)


def sweep_thresholds(cloud: PointCloud,
                     map_index: SpatialIndex,
                     thresholds: Iterable[float]) -> Dict[float, np.ndarray]:
    """
    Classifies a cloud at several thresholds, querying the map only once.

    :param cloud:       The live scan.
    :param map_index:   Index over the map, in the scan's frame.
    :param thresholds:  The distance thresholds to try.
    :return:            The per-point labels for each threshold.
    """
    configs = [BaselineConfig(threshold) for threshold in thresholds]
    distances = nn_distances(cloud, map_index)

    return {config.distance_threshold: (distances > config.distance_threshold).astype(LABEL_DTYPE)
            for config in configs}
