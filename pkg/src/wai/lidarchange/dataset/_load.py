import os

import numpy as np

from .._Label import LABEL_DTYPE
from ..file import csv, ply
from ..geometry import Polyline, RigidTransform, WORLD_FRAME
from ..projection import ProjectionConfig
from ._Frame import Frame
from ._map_view import crop_map, map_view_radius
from ._RepeatSequence import RepeatSequence
from ._SceneSpecFileReader import SceneSpecFileReader
from . import constants


def load_sequence(directory: str) -> RepeatSequence:
    """
    Reads a sequence directory written by save_sequence.

    :param directory:   The sequence directory.
    :return:            The sequence.
    """
    scene_filename = os.path.join(directory, constants.SCENE_FILENAME)
    spec = SceneSpecFileReader().read(scene_filename) if os.path.exists(scene_filename) else None
    projection = spec.sensor.projection if spec is not None else ProjectionConfig()

    world_map = ply.loadf(os.path.join(directory, constants.MAP_FILENAME))
    if world_map.frame_id != WORLD_FRAME:
        raise ValueError(f"Map of '{directory}' is tagged '{world_map.frame_id}', expected '{WORLD_FRAME}'")

    path_table = csv.loadf(os.path.join(directory, constants.PATH_FILENAME), types=[float, float])
    path = Polyline([[row[0], row[1]] for row in path_table.data])

    poses = csv.loadf(os.path.join(directory, constants.POSES_FILENAME), types=[int] + [float] * 13)
    if poses.header != constants.POSES_HEADER:
        raise ValueError(f"Unexpected poses header {poses.header}")

    radius = map_view_radius(projection)
    frames = []
    for row in poses.data:
        index, pose, odometer = row[0], RigidTransform.from_row(row[1:13]), row[13]
        name = constants.FRAME_NAME_FORMAT.format(index)

        live = ply.loadf(os.path.join(directory, constants.FRAMES_DIRECTORY, name + ".ply"))
        truth_table = csv.loadf(os.path.join(directory, constants.TRUTH_DIRECTORY, name + ".csv"), types=[int, int])
        points = np.array(truth_table.get_column("point"), dtype=np.int64)
        if not np.array_equal(points, np.arange(len(live))):
            raise ValueError(f"Truth of frame {index} doesn't list points 0..{len(live) - 1} in order")
        truth = np.array(truth_table.get_column("label"), dtype=LABEL_DTYPE)

        frames.append(Frame(live, pose, crop_map(world_map, pose, radius), truth, odometer, index))

    return RepeatSequence(world_map, frames, path, spec)
