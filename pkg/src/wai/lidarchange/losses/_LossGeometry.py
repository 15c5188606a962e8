import numpy as np

from ..geometry import SpatialIndex, transform, WORLD_FRAME


class LossGeometry:
    """
    The nearest-neighbour distances the loss terms need for one temporal
    batch. They don't depend on the probabilities, so are computed once.

    scan_to_map0/1:     each live point to its frame's map view.
    first_to_second:    each point of the first scan to the second, in the world frame.
    second_to_first:    each point of the second scan to the first, in the world frame.
    """
    def __init__(self,
                 scan_to_map0: np.ndarray,
                 scan_to_map1: np.ndarray,
                 first_to_second: np.ndarray,
                 second_to_first: np.ndarray):
        if len(scan_to_map0) != len(first_to_second) or len(scan_to_map1) != len(second_to_first):
            raise ValueError("Distance vectors of the same scan must have equal lengths")

        self.scan_to_map0: np.ndarray = scan_to_map0
        self.scan_to_map1: np.ndarray = scan_to_map1
        self.first_to_second: np.ndarray = first_to_second
        self.second_to_first: np.ndarray = second_to_first

    @classmethod
    def of(cls, batch) -> "LossGeometry":
        """
        Computes the distances for a temporal batch.

        :param batch:   The TemporalBatch.
        :return:        The loss geometry.
        """
        first, second = batch.first, batch.second

        scan_to_map0, _ = SpatialIndex(first.map_view).nearest_many(first.live.positions)
        scan_to_map1, _ = SpatialIndex(second.map_view).nearest_many(second.live.positions)

        first_world = transform(first.live, first.pose, WORLD_FRAME)
        second_world = transform(second.live, second.pose, WORLD_FRAME)
        first_to_second, _ = SpatialIndex(second_world).nearest_many(first_world.positions)
        second_to_first, _ = SpatialIndex(first_world).nearest_many(second_world.positions)

        return LossGeometry(scan_to_map0, scan_to_map1, first_to_second, second_to_first)
