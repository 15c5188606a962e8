from abc import ABC, abstractmethod

import numpy as np

from ..dataset import Frame


class Predictor(ABC):
    """
    Anything that labels the live points of a frame.
    """
    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def predict(self, frame: Frame) -> np.ndarray:
        """
        Labels every point of the frame's live scan.

        :param frame:   The frame.
        :return:        (n,) labels, one per live point.
        """
        pass
