import os
import tempfile

import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, ExceptionTest

from wai.lidarchange.dataset import RepeatSequence, load_sequence, save_sequence, constants

from ._helpers import small_scene, small_sequence


class SaveLoadTest(AbstractTest):
    """
    Tests writing and reading sequence directories.
    """
    @classmethod
    def subject_type(cls):
        return small_sequence

    @Test
    def reload(self, subject: RepeatSequence):
        with tempfile.TemporaryDirectory() as directory:
            save_sequence(subject, directory)
            loaded = load_sequence(directory)

        self.assertEqual(loaded.map, subject.map)
        self.assertEqual(loaded.spec, small_scene())
        np.testing.assert_array_equal(loaded.path.waypoints, subject.path.waypoints)
        self.assertEqual(len(loaded), len(subject))

        for original, reloaded in zip(subject, loaded):
            with self.subTest(frame=original.index):
                self.assertEqual(reloaded.index, original.index)
                self.assertEqual(reloaded.odometer, original.odometer)
                self.assertEqual(reloaded.pose, original.pose)
                self.assertEqual(reloaded.live, original.live)
                np.testing.assert_array_equal(reloaded.truth, original.truth)
                self.assertEqual(reloaded.map_view, original.map_view)

    @Test
    def layout(self, subject: RepeatSequence):
        with tempfile.TemporaryDirectory() as directory:
            save_sequence(subject, directory)
            files = set(os.listdir(directory))
            frames = sorted(os.listdir(os.path.join(directory, constants.FRAMES_DIRECTORY)))

        self.assertTrue({constants.MAP_FILENAME, constants.POSES_FILENAME, constants.PATH_FILENAME,
                         constants.SCENE_FILENAME, constants.FRAMES_DIRECTORY, constants.TRUTH_DIRECTORY} <= files)
        self.assertEqual(frames, [constants.FRAME_NAME_FORMAT.format(index) + ".ply" for index in range(len(subject))])

    @ExceptionTest(OSError)
    def missing_directory(self, subject: RepeatSequence):
        with tempfile.TemporaryDirectory() as directory:
            load_sequence(os.path.join(directory, "missing"))
