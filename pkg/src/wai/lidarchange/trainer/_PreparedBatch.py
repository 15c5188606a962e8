from typing import Tuple

from ..dataset import TemporalBatch
from ..losses import LossGeometry
from ..projection import ProjectionConfig, RangeImage, render


class PreparedBatch:
    """
    Everything a training step needs that doesn't depend on the model:
    the downsampled batch, the range images of both (live, map) pairs
    and the nearest-neighbour distances of the loss.
    """
    def __init__(self,
                 batch: TemporalBatch,
                 images: Tuple[Tuple[RangeImage, RangeImage], Tuple[RangeImage, RangeImage]],
                 geometry: LossGeometry):
        self.batch: TemporalBatch = batch
        self.images = images
        self.geometry: LossGeometry = geometry

    @classmethod
    def of(cls,
           batch: TemporalBatch,
           projection: ProjectionConfig,
           map_voxel: float,
           live_voxel: float) -> "PreparedBatch":
        first, _ = batch.first.downsample(map_voxel, live_voxel)
        second, _ = batch.second.downsample(map_voxel, live_voxel)
        downsampled = TemporalBatch(first, second, batch.spacing)

        images = tuple((render(frame.live, projection), render(frame.map_view, projection))
                       for frame in downsampled)

        return PreparedBatch(downsampled, images, LossGeometry.of(downsampled))
