from typing import Optional

from ..model import GRADIENT_MODES, NON_SATURATING_GRADIENT
from ..projection import ProjectionConfig


class TrainerConfig:
    """
    Settings of the training loop.

    :param epochs:          Maximum passes over all batches.
    :param patience:        Epochs without improvement of the mean total loss before stopping.
    :param min_improvement: Decrease of the mean total loss that counts as improvement.
    :param map_voxel:       Voxel edge for downsampling map views, in metres.
    :param live_voxel:      Voxel edge for downsampling live scans, in metres.
    :param pair_spacing:    Stored frames between the two frames of a batch.
    :param shuffle:         Whether to visit batches in a seeded random order.
    :param deterministic:   Whether to force deterministic torch kernels.
    :param threads:         Number of torch threads, or None to leave the default.
    :param max_steps:       Stop after this many optimiser steps, or None for no limit.
    :param projection:      The range-image geometry.
    :param gradient:        How the per-pixel gradient passes the softmax (see
                            wai.lidarchange.model.backward).
    """
    def __init__(self,
                 epochs: int = 50,
                 patience: int = 10,
                 min_improvement: float = 1e-6,
                 map_voxel: float = 0.2,
                 live_voxel: float = 0.05,
                 pair_spacing: int = 1,
                 shuffle: bool = True,
                 deterministic: bool = True,
                 threads: Optional[int] = None,
                 max_steps: Optional[int] = None,
                 projection: ProjectionConfig = ProjectionConfig(),
                 gradient: str = NON_SATURATING_GRADIENT):
        if epochs < 0:
            raise ValueError(f"Epochs must be non-negative, got {epochs}")

        if patience < 1:
            raise ValueError(f"Patience must be at least 1, got {patience}")

        if min_improvement < 0.0:
            raise ValueError(f"Minimum improvement must be non-negative, got {min_improvement}")

        if not map_voxel > 0.0 or not live_voxel > 0.0:
            raise ValueError(f"Voxel sizes must be positive, got {map_voxel} and {live_voxel}")

        if pair_spacing < 1:
            raise ValueError(f"Pair spacing must be at least 1, got {pair_spacing}")

        if threads is not None and threads < 1:
            raise ValueError(f"Thread count must be at least 1, got {threads}")

        if max_steps is not None and max_steps < 0:
            raise ValueError(f"Step limit must be non-negative, got {max_steps}")

        if gradient not in GRADIENT_MODES:
            raise ValueError(f"Unknown gradient mode '{gradient}', expected one of {', '.join(GRADIENT_MODES)}")

        self.epochs: int = int(epochs)
        self.patience: int = int(patience)
        self.min_improvement: float = float(min_improvement)
        self.map_voxel: float = float(map_voxel)
        self.live_voxel: float = float(live_voxel)
        self.pair_spacing: int = int(pair_spacing)
        self.shuffle: bool = bool(shuffle)
        self.deterministic: bool = bool(deterministic)
        self.threads: Optional[int] = threads
        self.max_steps: Optional[int] = max_steps
        self.projection: ProjectionConfig = projection
        self.gradient: str = gradient

    def replace(self, **changes) -> "TrainerConfig":
        """
        Gets a copy with some settings changed.
        """
        settings = dict(vars(self))
        settings.update(changes)
        return TrainerConfig(**settings)
