from typing import Optional

import numpy as np

from ..baseline import BaselineConfig, nn_classify
from ..dataset import Frame
from ..geometry import SpatialIndex, voxel_downsample
from ._Predictor import Predictor


class BaselinePredictor(Predictor):
    """
    Labels frames with the nearest-neighbour detector against the frame's
    map view, optionally downsampled first.
    """
    def __init__(self,
                 config: BaselineConfig = BaselineConfig(),
                 map_voxel: Optional[float] = None,
                 name: str = "baseline"):
        self.config: BaselineConfig = config
        self.map_voxel: Optional[float] = map_voxel
        self._name: str = name

    @property
    def name(self) -> str:
        return self._name

    def map_index(self, frame: Frame) -> SpatialIndex:
        map_view = frame.map_view if self.map_voxel is None else voxel_downsample(frame.map_view, self.map_voxel)
        return SpatialIndex(map_view)

    def predict(self, frame: Frame) -> np.ndarray:
        return nn_classify(frame.live, self.map_index(frame), self.config)
