import os

from ..file import csv, ply
from ..file.csv import CSVFile
from ._RepeatSequence import RepeatSequence
from ._SceneSpecFileWriter import SceneSpecFileWriter
from . import constants


def save_sequence(sequence: RepeatSequence, directory: str):
    """
    Writes a sequence directory:

        map.ply             the taught map, world frame
        frames/NNNN.ply     live scans, sensor frame, with intensity
        poses.csv           frame, row-major rotation, translation, odometer
        truth/NNNN.csv      point, label
        path.csv            x, y of the taught path
        scene.properties    the scene, if known

    Map views aren't stored; they are cropped from the map on load.

    :param sequence:    The sequence to write.
    :param directory:   The directory to write into (created if needed).
    """
    os.makedirs(directory, exist_ok=True)

    ply.save(sequence.map, os.path.join(directory, constants.MAP_FILENAME))

    poses = CSVFile(constants.POSES_HEADER, types=[int] + [float] * 13)
    for frame in sequence.frames:
        name = constants.FRAME_NAME_FORMAT.format(frame.index)
        ply.save(frame.live, os.path.join(directory, constants.FRAMES_DIRECTORY, name + ".ply"))

        truth = CSVFile(constants.TRUTH_HEADER,
                        [[point, int(label)] for point, label in enumerate(frame.truth)],
                        [int, int])
        csv.save(truth, os.path.join(directory, constants.TRUTH_DIRECTORY, name + ".csv"))

        poses.append([frame.index] + [float(value) for value in frame.pose.as_row()] + [frame.odometer])
    csv.save(poses, os.path.join(directory, constants.POSES_FILENAME))

    path = CSVFile(constants.PATH_HEADER, [[float(x), float(y)] for x, y in sequence.path.waypoints], [float, float])
    csv.save(path, os.path.join(directory, constants.PATH_FILENAME))

    if sequence.spec is not None:
        SceneSpecFileWriter().dumpf(os.path.join(directory, constants.SCENE_FILENAME), sequence.spec)
