from typing import Iterable, List

import numpy as np

from ..statistics import interquartile_range, mean_and_std


class RuntimeStats:
    """
    Summary of per-frame processing times, in milliseconds.
    """
    def __init__(self, samples_ms: Iterable[float]):
        self.samples_ms: List[float] = [float(sample) for sample in samples_ms]

        if len(self.samples_ms) == 0:
            raise ValueError("Runtime statistics need at least one sample")

        self.mean_ms, self.std_ms = mean_and_std(self.samples_ms)
        self.median_ms: float = float(np.median(self.samples_ms))
        self.iqr_ms: float = float(interquartile_range(self.samples_ms))

    @classmethod
    def from_seconds(cls, samples_s: Iterable[float]) -> "RuntimeStats":
        return RuntimeStats(sample * 1000.0 for sample in samples_s)

    def __len__(self):
        return len(self.samples_ms)

    def __str__(self):
        return f"{self.mean_ms:.1f} ± {self.std_ms:.1f} ms"
