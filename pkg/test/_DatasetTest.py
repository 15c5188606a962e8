import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, SubjectArgs, ExceptionTest

from wai.lidarchange import Label
from wai.lidarchange.dataset import (
    Frame,
    ReflectiveClutter,
    SceneSpec,
    SequenceGenerator,
    TemporalBatch,
    pair_frames,
    reflective_label
)
from wai.lidarchange.geometry import PointCloud, RigidTransform, WORLD_FRAME, transform

from ._helpers import SMALL_CHANGE, SMALL_SIGN, make_frame, small_scene


class DatasetTest(AbstractTest):
    """
    Tests frames, pairing, reflective labelling and the sequence generator.
    """
    @classmethod
    def subject_type(cls):
        return SequenceGenerator

    @classmethod
    def common_arguments(cls):
        return (small_scene(),), {"seed": 7}

    @Test
    def stations(self, subject: SequenceGenerator):
        np.testing.assert_allclose(subject.repeat_stations(), [0.0, 0.3, 0.6, 0.9, 1.2])
        np.testing.assert_allclose(subject.teach_stations(), [0.15, 0.45, 0.75, 1.05])

    @Test
    def generation_is_deterministic(self, subject: SequenceGenerator):
        first = subject.generate()
        second = SequenceGenerator(small_scene(), seed=7).generate()

        self.assertEqual(first.map, second.map)
        self.assertEqual(len(first), len(second))
        for a, b in zip(first, second):
            self.assertEqual(a.live, b.live)
            np.testing.assert_array_equal(a.truth, b.truth)

    @Test
    def different_seeds_differ(self, subject: SequenceGenerator):
        first = subject.generate()
        second = SequenceGenerator(small_scene(), seed=8).generate()
        self.assertNotEqual(first[0].live, second[0].live)

    @Test
    def frames_follow_the_path(self, subject: SequenceGenerator):
        sequence = subject.generate()

        self.assertEqual(len(sequence), 5)
        self.assertEqual(sequence.map.frame_id, WORLD_FRAME)
        np.testing.assert_allclose(sequence.timestamps, [0.0, 0.3, 0.6, 0.9, 1.2])
        for frame in sequence:
            np.testing.assert_allclose(frame.pose.translation, [frame.odometer, 0.0, 1.0], atol=1e-12)

    @Test
    def changed_points_lie_on_the_change_object(self, subject: SequenceGenerator):
        sequence = subject.generate()
        changed_total = 0

        for frame in sequence:
            world = transform(frame.live, frame.pose, WORLD_FRAME)
            changed = frame.truth == Label.CHANGED
            changed_total += int(np.sum(changed))
            self.assertTrue(np.all(SMALL_CHANGE.shape.contains(world.positions[changed], margin=0.1)))

        self.assertGreater(changed_total, 0)

    @Test
    def map_has_no_change_object(self, subject: SequenceGenerator):
        sequence = subject.generate()
        above_ground = sequence.map.positions[sequence.map.positions[:, 2] > 0.1]
        self.assertFalse(np.any(SMALL_CHANGE.shape.contains(above_ground)))

    @Test
    def changed_points_are_reflective(self, subject: SequenceGenerator):
        for frame in subject.generate():
            np.testing.assert_array_equal(reflective_label(frame.live), frame.truth)

    @Test
    def no_changes_no_changed_points(self, subject: SequenceGenerator):
        sequence = SequenceGenerator(small_scene(changes=0), seed=7).generate()
        self.assertEqual(sum(int(np.sum(frame.truth)) for frame in sequence), 0)

    @Test
    def clutter_ghosts_only_in_repeat_scans(self, subject: SequenceGenerator):
        generator = SequenceGenerator(small_scene(changes=0, clutter=(ReflectiveClutter(SMALL_SIGN, 1.0),)), seed=7)
        pose = generator.pose_at(0.6)
        vegetation = [patch.sample_elements(np.random.default_rng(1)) for patch in generator.spec.vegetation]

        # Same random source, so the two scans share their range noise
        teach, _ = generator.scan(pose, vegetation, False, np.random.default_rng(0))
        repeat, truth = generator.scan(pose, vegetation, True, np.random.default_rng(0))

        ratio = repeat.ranges() / teach.ranges()
        ghosts = ~np.isclose(ratio, 1.0, rtol=1e-12)
        self.assertGreater(int(np.sum(ghosts)), 0)
        self.assertEqual(int(np.sum(ghosts)), int(np.sum(teach.intensity >= 0.9)))
        self.assertTrue(np.all((ratio[ghosts] >= 0.3 - 1e-9) & (ratio[ghosts] <= 0.8 + 1e-9)))
        self.assertTrue(np.all(truth[ghosts] == Label.CONSISTENT))
        self.assertTrue(np.all(repeat.intensity[ghosts] >= 0.9))

    @Test
    def ghosts_fool_the_intensity_labeller(self, subject: SequenceGenerator):
        sequence = SequenceGenerator(small_scene(clutter=(ReflectiveClutter(SMALL_SIGN, 1.0),)), seed=7).generate()

        false_alarms = sum(int(np.sum((reflective_label(frame.live) == Label.CHANGED) &
                                      (frame.truth == Label.CONSISTENT)))
                           for frame in sequence)
        self.assertGreater(false_alarms, 0)

    @ExceptionTest(ValueError)
    def zero_length_path(self, subject: SequenceGenerator):
        SequenceGenerator(SceneSpec.from_properties({"path.waypoints": "1,1;1,1"}))

    @Test
    def pair_counts(self, subject: SequenceGenerator):
        frames = [make_frame(0.3 * index, index) for index in range(5)]

        for spacing, expected in ((1, 4), (2, 3), (4, 1), (5, 0)):
            with self.subTest(spacing=spacing):
                batches = pair_frames(frames, spacing)
                self.assertEqual(len(batches), expected)
                for batch in batches:
                    self.assertEqual(batch.second.index - batch.first.index, spacing)

    @ExceptionTest(ValueError)
    def pair_single_frame(self, subject: SequenceGenerator):
        pair_frames([make_frame()])

    @ExceptionTest(ValueError)
    def pair_zero_spacing(self, subject: SequenceGenerator):
        pair_frames([make_frame(), make_frame(0.3, 1)], 0)

    @Test
    def odometer_spacing(self, subject: SequenceGenerator):
        batch = TemporalBatch(make_frame(0.3, 1), make_frame(0.9, 3), 2)
        self.assertAlmostEqual(batch.odometer_spacing, 0.6)

    @Test
    def reflective_threshold(self, subject: SequenceGenerator):
        cloud = PointCloud(np.ones((4, 3)), [0.1, 0.79, 0.8, 0.95])
        np.testing.assert_array_equal(reflective_label(cloud), [0, 0, 1, 1])
        np.testing.assert_array_equal(reflective_label(cloud, 0.0), [1, 1, 1, 1])

    @ExceptionTest(ValueError)
    def reflective_without_intensity(self, subject: SequenceGenerator):
        reflective_label(PointCloud(np.ones((2, 3))))

    @ExceptionTest(ValueError)
    def reflective_threshold_out_of_range(self, subject: SequenceGenerator):
        reflective_label(PointCloud(np.ones((2, 3)), [0.5, 0.5]), 1.5)

    @ExceptionTest(ValueError)
    def frame_with_world_cloud(self, subject: SequenceGenerator):
        cloud = PointCloud(np.ones((2, 3)), frame_id=WORLD_FRAME)
        Frame(cloud, RigidTransform.identity(), cloud, [0, 0], 0.0)

    @ExceptionTest(ValueError)
    def frame_with_bad_labels(self, subject: SequenceGenerator):
        cloud = PointCloud(np.ones((2, 3)))
        Frame(cloud, RigidTransform.identity(), cloud, [0, 2], 0.0)

    @Test
    def downsampled_truth_is_any_changed(self, subject: SequenceGenerator):
        frame = make_frame(changed_points=2)
        downsampled, membership = frame.downsample(0.2, 1.0)

        self.assertEqual(len(membership), len(frame.live))
        for point in np.flatnonzero(frame.truth):
            self.assertEqual(downsampled.truth[membership[point]], Label.CHANGED)
