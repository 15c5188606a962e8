from typing import List, Optional, Iterator

import numpy as np

from ..geometry import PointCloud, Polyline, WORLD_FRAME
from ._Frame import Frame
from ._SceneSpec import SceneSpec


class RepeatSequence:
    """
    A generated (or loaded) sequence: the taught map in the world frame,
    the taught path and the stored repeat frames in driving order.
    """
    def __init__(self,
                 map: PointCloud,
                 frames: List[Frame],
                 path: Polyline,
                 spec: Optional[SceneSpec] = None,
                 seed: Optional[int] = None):
        if map.frame_id != WORLD_FRAME:
            raise ValueError(f"The map must be in the '{WORLD_FRAME}' frame, got '{map.frame_id}'")

        self.map: PointCloud = map
        self.frames: List[Frame] = list(frames)
        self.path: Polyline = path
        self.spec: Optional[SceneSpec] = spec
        self.seed: Optional[int] = seed

    def __len__(self) -> int:
        return len(self.frames)

    def __iter__(self) -> Iterator[Frame]:
        return iter(self.frames)

    def __getitem__(self, index: int) -> Frame:
        return self.frames[index]

    @property
    def speed(self) -> float:
        return self.spec.speed if self.spec is not None else 1.0

    @property
    def timestamps(self) -> np.ndarray:
        """
        Seconds since the first frame, assuming constant speed.
        """
        return np.array([frame.odometer for frame in self.frames]) / self.speed

    def __repr__(self):
        return f"RepeatSequence(map={len(self.map)} points, frames={len(self.frames)}, seed={self.seed})"
