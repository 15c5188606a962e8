import numpy as np
import torch

from ..dataset import Frame
from ..model import ChangeModel, forward, predict_labels
from ..projection import ProjectionConfig, backproject_labels, render
from ._Predictor import Predictor


class ModelPredictor(Predictor):
    """
    Labels frames with a trained network: downsample, render, classify
    the pixels, assign pixel labels to the downsampled points and lift
    them back to every original point.
    """
    def __init__(self,
                 model: ChangeModel,
                 projection: ProjectionConfig = ProjectionConfig(),
                 map_voxel: float = 0.2,
                 live_voxel: float = 0.05,
                 threshold: float = 0.5,
                 name: str = "model"):
        if model.config.shape != projection.shape:
            raise ValueError(f"Model expects {model.config.shape} images but the projection renders "
                             f"{projection.shape}")

        self.model: ChangeModel = model
        self.projection: ProjectionConfig = projection
        self.map_voxel: float = map_voxel
        self.live_voxel: float = live_voxel
        self.threshold: float = threshold
        self._name: str = name

    @property
    def name(self) -> str:
        return self._name

    def predict(self, frame: Frame) -> np.ndarray:
        downsampled, membership = frame.downsample(self.map_voxel, self.live_voxel)
        live_image = render(downsampled.live, self.projection)
        map_image = render(downsampled.map_view, self.projection)

        self.model.eval()
        with torch.no_grad():
            logits = forward(self.model, live_image, map_image, retain_tape=False)

        labels = backproject_labels(predict_labels(logits, self.threshold), live_image, len(downsampled.live))
        return labels[membership]
