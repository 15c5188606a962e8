import math

import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, SubjectArgs, ExceptionTest

from wai.lidarchange.geometry import (
    PointCloud,
    Point3,
    RigidTransform,
    SENSOR_FRAME,
    WORLD_FRAME,
    transform,
    voxel_assign,
    voxel_downsample
)


class PointCloudTest(AbstractTest):
    """
    Tests the PointCloud class and the transform/voxel functions.
    """
    @classmethod
    def subject_type(cls):
        return PointCloud

    @classmethod
    def common_arguments(cls):
        return ([[0.0, 0.0, 0.0], [0.01, 0.02, 0.03], [1.0, 1.0, 1.0], [0.04, 0.0, 0.0]],), {}

    @Test
    def ranges(self, subject: PointCloud):
        np.testing.assert_allclose(subject.ranges(), [0.0, np.sqrt(0.0014), np.sqrt(3.0), 0.04])

    @Test
    def points_are_point3(self, subject: PointCloud):
        self.assertEqual(subject.points[2], Point3(1.0, 1.0, 1.0))
        self.assertEqual(len(list(subject)), 4)

    @Test
    def positions_are_read_only(self, subject: PointCloud):
        with self.assertRaises(ValueError):
            subject.positions[0, 0] = 5.0

    @ExceptionTest(ValueError)
    @SubjectArgs([[0.0, 0.0]])
    def wrong_shape(self, subject: PointCloud):
        pass

    @ExceptionTest(ValueError)
    @SubjectArgs([[0.0, 0.0, np.nan]])
    def non_finite(self, subject: PointCloud):
        pass

    @ExceptionTest(ValueError)
    @SubjectArgs([[0.0, 0.0, 0.0]], [1.5])
    def intensity_out_of_range(self, subject: PointCloud):
        pass

    @Test
    def concatenate_keeps_order(self, subject: PointCloud):
        both = PointCloud.concatenate([subject, subject.subset([2])])
        self.assertEqual(len(both), 5)
        np.testing.assert_array_equal(both.positions[4], [1.0, 1.0, 1.0])

    @ExceptionTest(ValueError)
    def concatenate_mixed_frames(self, subject: PointCloud):
        PointCloud.concatenate([subject, subject.with_positions(subject.positions, WORLD_FRAME)])

    @Test
    def identity_transform_is_exact(self, subject: PointCloud):
        moved = transform(subject, RigidTransform.identity())
        self.assertEqual(moved, subject)

    @Test
    def transform_then_inverse(self, subject: PointCloud):
        T = RigidTransform.from_yaw(0.7, (1.0, -2.0, 0.5))
        there = transform(subject, T, WORLD_FRAME)
        back = transform(there, T.inverse(), SENSOR_FRAME)
        self.assertEqual(there.frame_id, WORLD_FRAME)
        np.testing.assert_allclose(back.positions, subject.positions, atol=1e-12)

    @Test
    def voxel_merges_close_points(self, subject: PointCloud):
        downsampled, membership = voxel_assign(subject, 0.05)
        self.assertEqual(len(downsampled), 2)
        np.testing.assert_array_equal(membership, [0, 0, 1, 0])
        np.testing.assert_allclose(downsampled.positions[0], [0.05 / 3, 0.02 / 3, 0.01])

    @Test
    def voxel_is_idempotent_on_count(self, subject: PointCloud):
        once = voxel_downsample(subject, 0.05)
        self.assertEqual(len(voxel_downsample(once, 0.05)), len(once))

    @Test
    def small_voxel_keeps_distinct_points(self, subject: PointCloud):
        self.assertEqual(len(voxel_downsample(subject, 1e-3)), len(subject))

    @Test
    def voxel_of_empty_cloud(self, subject: PointCloud):
        downsampled, membership = voxel_assign(PointCloud.empty(), 0.1)
        self.assertEqual(len(downsampled), 0)
        self.assertEqual(len(membership), 0)

    @ExceptionTest(ValueError)
    def zero_voxel(self, subject: PointCloud):
        voxel_downsample(subject, 0.0)

    @Test
    @SubjectArgs([[0.0, 0.0, 0.0], [0.01, 0.0, 0.0]], [0.2, 0.6])
    def voxel_averages_intensity(self, subject: PointCloud):
        downsampled = voxel_downsample(subject, 0.1)
        np.testing.assert_allclose(downsampled.intensity, [0.4])

    @Test
    def voxel_matches_brute_force(self, subject: PointCloud):
        rng = np.random.default_rng(20)
        for instance in range(100):
            positions = rng.uniform(-1.0, 1.0, (rng.integers(1, 60), 3))
            intensity = rng.uniform(0.0, 1.0, len(positions))
            voxel = float(rng.uniform(0.2, 1.0))

            # Members of each voxel, voxels in order of first appearance
            members = {}
            for index, point in enumerate(positions):
                members.setdefault(tuple(math.floor(value / voxel) for value in point), []).append(index)
            expected_membership = np.zeros(len(positions), dtype=np.int64)
            for output, indices in enumerate(members.values()):
                expected_membership[indices] = output

            cloud = PointCloud(positions, intensity)
            downsampled, membership = voxel_assign(cloud, voxel)

            with self.subTest(instance=instance):
                np.testing.assert_array_equal(membership, expected_membership)
                np.testing.assert_allclose(downsampled.positions,
                                           [np.mean(positions[indices], axis=0) for indices in members.values()],
                                           atol=1e-12)
                np.testing.assert_allclose(downsampled.intensity,
                                           [np.mean(intensity[indices]) for indices in members.values()],
                                           atol=1e-12)
                np.testing.assert_array_equal(voxel_downsample(cloud, voxel).positions, downsampled.positions)
