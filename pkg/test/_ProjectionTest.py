import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, SubjectArgs, ExceptionTest

from wai.lidarchange import DegeneratePointError, Label
from wai.lidarchange.geometry import PointCloud
from wai.lidarchange.projection import (
    ProjectionConfig,
    project_point,
    render,
    backproject,
    backproject_labels,
    pixel_indices,
    project_points,
    scatter_to_pixels,
    EMPTY_INDEX
)


class ProjectionTest(AbstractTest):
    """
    Tests rendering of range images and the mapping back to points.
    """
    @classmethod
    def subject_type(cls):
        return ProjectionConfig

    @Test
    def defaults(self, subject: ProjectionConfig):
        self.assertEqual(subject.shape, (32, 256))
        self.assertEqual(subject.max_range, 10.0)

    @Test
    def forward_axis(self, subject: ProjectionConfig):
        u, v, r = project_point((2.0, 0.0, 0.0), subject)
        self.assertAlmostEqual(u, 128.0)
        self.assertAlmostEqual(v, 16.0)
        self.assertAlmostEqual(r, 2.0)

    @Test
    def left_axis(self, subject: ProjectionConfig):
        u, _, _ = project_point((0.0, 1.0, 0.0), subject)
        self.assertAlmostEqual(u, 64.0)

    @ExceptionTest(DegeneratePointError)
    def origin(self, subject: ProjectionConfig):
        project_point((0.0, 0.0, 0.0), subject)

    @ExceptionTest(ValueError)
    @SubjectArgs(32, 256, 25.0, 30.0)
    def fov_down_beyond_fov(self, subject: ProjectionConfig):
        pass

    @Test
    def pixel_centre_rays_land_in_their_pixel(self, subject: ProjectionConfig):
        rows, columns = np.meshgrid(np.arange(subject.height), np.arange(subject.width), indexing="ij")
        elevation, azimuth = subject.pixel_centre_angles(rows.reshape(-1), columns.reshape(-1))
        directions = np.stack((np.cos(elevation) * np.cos(azimuth),
                               np.cos(elevation) * np.sin(azimuth),
                               np.sin(elevation)), axis=1)

        image = render(PointCloud(5.0 * directions), subject)
        np.testing.assert_array_equal(image.index_map.reshape(-1), np.arange(subject.height * subject.width))

    @Test
    def closest_point_wins(self, subject: ProjectionConfig):
        cloud = PointCloud([[3.0, 0.0, 0.0], [2.0, 0.0, 0.0], [2.0, 0.0, 0.0], [0.0, 0.0, 50.0], [20.0, 0.0, 0.0]])
        image = render(cloud, subject)

        self.assertEqual(image.index_map[16, 128], 1)
        self.assertAlmostEqual(image.ranges[16, 128], 2.0)
        self.assertEqual(int(np.sum(image.populated)), 1)
        self.assertEqual(image.pixel_of_point[3], EMPTY_INDEX)

    @Test
    def every_winner_projects_into_its_pixel(self, subject: ProjectionConfig):
        rng = np.random.default_rng(0)
        cloud = PointCloud(rng.uniform(-8.0, 8.0, (2000, 3)))
        image = render(cloud, subject)

        populated = np.flatnonzero(image.index_map.reshape(-1) >= 0)
        winners = image.index_map.reshape(-1)[populated]
        np.testing.assert_array_equal(image.pixel_of_point[winners], populated)
        np.testing.assert_allclose(image.ranges.reshape(-1)[populated], cloud.ranges()[winners])

    @Test
    def backproject_shares_winner_value(self, subject: ProjectionConfig):
        cloud = PointCloud([[2.0, 0.0, 0.0], [3.0, 0.0, 0.0], [0.0, 0.0, 5.0], [20.0, 0.0, 0.0]])
        image = render(cloud, subject)
        raster = np.zeros(subject.shape)
        raster[16, 128] = 0.75

        np.testing.assert_allclose(backproject(raster, image, fill=-1.0), [0.75, 0.75, -1.0, 0.75])

    @Test
    def labels_outside_the_image_are_consistent(self, subject: ProjectionConfig):
        cloud = PointCloud([[2.0, 0.0, 0.0], [0.0, 0.0, 5.0]])
        image = render(cloud, subject)
        labels = np.full(subject.shape, Label.CHANGED, dtype=np.uint8)

        np.testing.assert_array_equal(backproject_labels(labels, image, 2), [Label.CHANGED, Label.CONSISTENT])

    @ExceptionTest(ValueError)
    def labels_for_wrong_count(self, subject: ProjectionConfig):
        image = render(PointCloud([[2.0, 0.0, 0.0]]), subject)
        backproject_labels(np.zeros(subject.shape), image, 2)

    @Test
    def scatter_is_adjoint_of_backproject(self, subject: ProjectionConfig):
        rng = np.random.default_rng(1)
        cloud = PointCloud(rng.uniform(-8.0, 8.0, (500, 3)))
        image = render(cloud, subject)
        raster = rng.normal(size=subject.shape)
        values = rng.normal(size=len(cloud))

        self.assertAlmostEqual(float(np.dot(backproject(raster, image), values)),
                               float(np.sum(raster * scatter_to_pixels(values, image))))

    @Test
    def points_in_the_field_of_view_land_in_the_image(self, subject: ProjectionConfig):
        rng = np.random.default_rng(2)
        elevation = rng.uniform(-subject.fov_down_radians, subject.fov_radians - subject.fov_down_radians, 1000)
        azimuth = rng.uniform(-np.pi, np.pi, 1000)
        ranges = rng.uniform(0.5, subject.max_range, 1000)
        positions = ranges[:, None] * np.stack((np.cos(elevation) * np.cos(azimuth),
                                                np.cos(elevation) * np.sin(azimuth),
                                                np.sin(elevation)), axis=1)

        u, v, r = project_points(positions, subject)
        self.assertTrue(np.all((u >= 0.0) & (u <= subject.width)))
        self.assertTrue(np.all((v >= 0.0) & (v <= subject.height)))
        np.testing.assert_allclose(r, ranges)

        pixels, _, has_pixel = pixel_indices(positions, subject)
        self.assertTrue(np.all(has_pixel))
        self.assertTrue(np.all((pixels // subject.width >= 0) & (pixels // subject.width < subject.height)))
        self.assertTrue(np.all((pixels % subject.width >= 0) & (pixels % subject.width < subject.width)))

    @Test
    def sphere_renders_its_radius(self, subject: ProjectionConfig):
        rng = np.random.default_rng(3)
        directions = rng.normal(size=(200000, 3))
        directions /= np.linalg.norm(directions, axis=1)[:, None]

        image = render(PointCloud(4.0 * directions), subject)

        self.assertGreater(float(np.mean(image.populated)), 0.95)
        np.testing.assert_allclose(image.ranges[image.populated], 4.0)

    @Test
    def occluded_point_takes_its_pixel_label(self, subject: ProjectionConfig):
        cloud = PointCloud([[2.0, 0.0, 0.0], [3.0, 0.0, 0.0], [0.0, 2.0, 0.0]])
        image = render(cloud, subject)
        labels = np.full(subject.shape, Label.CONSISTENT, dtype=np.uint8)
        labels[16, 128] = Label.CHANGED

        self.assertEqual(image.index_map[16, 128], 0)
        self.assertEqual(image.pixel_of_point[1], image.pixel_of_point[0])
        np.testing.assert_array_equal(backproject_labels(labels, image, 3),
                                      [Label.CHANGED, Label.CHANGED, Label.CONSISTENT])
