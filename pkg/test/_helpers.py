"""
Small scenes and frames shared by the tests.
"""
from typing import Sequence

import numpy as np

from wai.lidarchange import Label
from wai.lidarchange.dataset import (
    Box,
    ChangeObject,
    Cylinder,
    Frame,
    ReflectiveClutter,
    SceneSpec,
    SensorModel,
    TemporalBatch,
    VegetationPatch,
    generate_sequence
)
from wai.lidarchange.geometry import PointCloud, Polyline, RigidTransform
from wai.lidarchange.model import ModelConfig
from wai.lidarchange.projection import ProjectionConfig

# Coarse raster keeping the simulated scans small
SMALL_PROJECTION = ProjectionConfig(8, 64, 25.0, 12.5, 10.0)

# The change object of the small scene
SMALL_CHANGE = ChangeObject(Box((2.5, 1.0, 0.4), (0.6, 0.6, 0.8)))

# A sign that can be added to the small scene as reflective clutter
SMALL_SIGN = Box((3.0, -1.5, 0.8), (1.2, 0.1, 1.6))


def small_scene(changes: int = 1, jitter: float = 0.05, clutter: Sequence[ReflectiveClutter] = ()) -> SceneSpec:
    """
    A scene with a 1.2 m path (five stored frames), one wall, one post
    and one vegetation patch. It has one reflective change object unless
    'changes' is 0, plus any given clutter.
    """
    return SceneSpec(
        path=Polyline(((0.0, 0.0), (1.2, 0.0))),
        ground_extent=12.0,
        boxes=(Box((5.0, 0.0, 0.75), (0.4, 6.0, 1.5)),),
        cylinders=(Cylinder((2.0, -2.0), 0.2, 2.0),),
        vegetation=(VegetationPatch((3.0, 2.5), (1.0, 1.0), density=2.0, jitter=jitter),),
        changes=(SMALL_CHANGE,) if changes > 0 else (),
        clutter=clutter,
        sensor=SensorModel(SMALL_PROJECTION)
    )


def small_sequence(seed: int = 0, changes: int = 1):
    return generate_sequence(small_scene(changes), seed)


def small_model_config(**kwargs) -> ModelConfig:
    """
    A model matching SMALL_PROJECTION with very few channels.
    """
    return ModelConfig(**{"height": 8, "width": 64, "encoder_channels": (2, 2, 2, 2), **kwargs})


def make_frame(offset: float = 0.0, index: int = 0, changed_points: int = 2) -> Frame:
    """
    A hand-made frame: a ring of map points around the sensor, a live scan
    of the same ring shifted by 'offset' along x, and a few extra live
    points 1 m in front of the sensor marked Changed.
    """
    angles = np.linspace(0.0, 2.0 * np.pi, 24, endpoint=False)
    ring = np.column_stack((4.0 * np.cos(angles), 4.0 * np.sin(angles), np.zeros_like(angles)))
    extra = np.column_stack((np.full(changed_points, 1.0),
                             np.linspace(-0.2, 0.2, changed_points),
                             np.zeros(changed_points)))

    live = PointCloud(np.concatenate((ring, extra)))
    truth = np.concatenate((np.full(len(ring), Label.CONSISTENT), np.full(changed_points, Label.CHANGED)))
    pose = RigidTransform.from_translation(offset, 0.0, 1.0)

    return Frame(live, pose, PointCloud(ring), truth, offset, index)


def make_batch() -> TemporalBatch:
    return TemporalBatch(make_frame(0.0, 0), make_frame(0.3, 1, 3))
