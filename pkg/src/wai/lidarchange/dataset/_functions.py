from typing import List, Sequence

import numpy as np

from .._Label import LABEL_DTYPE
from ..geometry import PointCloud
from ._Frame import Frame
from ._RepeatSequence import RepeatSequence
from ._SceneSpec import SceneSpec
from ._SequenceGenerator import SequenceGenerator
from ._TemporalBatch import TemporalBatch


def generate_sequence(spec: SceneSpec, seed: int = 0, map_voxel: float = 0.05) -> RepeatSequence:
    """
    Generates a teach map and the repeat frames of a scene. The result is
    fully determined by the scene and the seed.

    :param spec:        The scene.
    :param seed:        The random seed.
    :param map_voxel:   Voxel edge to which the taught map is downsampled.
    :return:            The sequence.
    """
    return SequenceGenerator(spec, seed, map_voxel).generate()


def reflective_label(cloud: PointCloud, intensity_threshold: float = 0.8) -> np.ndarray:
    """
    Labels points Changed when their intensity reaches the threshold,
    recovering returns from retro-reflective change objects.

    :param cloud:                   The cloud, with intensity.
    :param intensity_threshold:     The threshold, in [0, 1].
    :return:                        The per-point labels.
    """
    if not cloud.has_intensity:
        raise ValueError("Can't label by reflectivity without intensity values")

    if not 0.0 <= intensity_threshold <= 1.0:
        raise ValueError(f"Intensity threshold must be in [0, 1], got {intensity_threshold}")

    return (cloud.intensity >= intensity_threshold).astype(LABEL_DTYPE)


def pair_frames(frames: Sequence[Frame], spacing: int = 1) -> List[TemporalBatch]:
    """
    Pairs every frame with the one 'spacing' frames later. Frames with no
    partner that far ahead only appear as the second of a pair.

    :param frames:      The frames, in driving order (at least two).
    :param spacing:     The pairing distance, in stored frames.
    :return:            The batches; empty if the spacing exceeds the sequence.
    """
    if len(frames) < 2:
        raise ValueError(f"Need at least two frames to pair, got {len(frames)}")

    if spacing <= 0:
        raise ValueError(f"Spacing must be positive, got {spacing}")

    return [TemporalBatch(frames[index], frames[index + spacing], spacing)
            for index in range(len(frames) - spacing)]
