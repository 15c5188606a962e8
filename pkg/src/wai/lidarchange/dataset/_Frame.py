from typing import Tuple

import numpy as np

from .._Label import Label, LABEL_DTYPE
from ..geometry import PointCloud, RigidTransform, SENSOR_FRAME, voxel_assign


class Frame:
    """
    One stored repeat scan: the live cloud and the view of the map around
    it, both in the sensor frame, the sensor pose in the world, the true
    label of every live point and the distance driven so far.
    """
    def __init__(self,
                 live: PointCloud,
                 pose: RigidTransform,
                 map_view: PointCloud,
                 truth: np.ndarray,
                 odometer: float,
                 index: int = 0):
        truth = np.asarray(truth)

        if truth.shape != (len(live),):
            raise ValueError(f"Expected {len(live)} truth labels, got shape {truth.shape}")

        if not np.all((truth == Label.CONSISTENT) | (truth == Label.CHANGED)):
            raise ValueError("Truth labels must be 0 (Consistent) or 1 (Changed)")

        for name, cloud in (("live", live), ("map view", map_view)):
            if cloud.frame_id != SENSOR_FRAME:
                raise ValueError(f"The {name} cloud must be in the '{SENSOR_FRAME}' frame, got '{cloud.frame_id}'")

        if odometer < 0.0:
            raise ValueError(f"Odometer must be non-negative, got {odometer}")

        self.live: PointCloud = live
        self.pose: RigidTransform = pose
        self.map_view: PointCloud = map_view
        self.truth: np.ndarray = truth.astype(LABEL_DTYPE)
        self.odometer: float = float(odometer)
        self.index: int = int(index)

    def __len__(self):
        return len(self.live)

    def __repr__(self):
        return (f"Frame(index={self.index}, odometer={self.odometer:.2f}, live={len(self.live)} points, "
                f"map_view={len(self.map_view)} points, changed={int(np.sum(self.truth))})")

    def downsample(self, map_voxel: float, live_voxel: float) -> Tuple["Frame", np.ndarray]:
        """
        Voxel-downsamples the map view and the live scan. A downsampled live
        point is Changed if any point merged into it was.

        :param map_voxel:   Voxel edge for the map view, in metres.
        :param live_voxel:  Voxel edge for the live scan, in metres.
        :return:            The downsampled frame, and for every original
                            live point the index of its downsampled point.
        """
        map_view, _ = voxel_assign(self.map_view, map_voxel)
        live, membership = voxel_assign(self.live, live_voxel)

        truth = np.zeros(len(live), dtype=LABEL_DTYPE)
        np.maximum.at(truth, membership, self.truth)

        return Frame(live, self.pose, map_view, truth, self.odometer, self.index), membership
