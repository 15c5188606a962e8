import math

import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, SubjectArgs, ExceptionTest

from wai.lidarchange.geometry import Polyline


class PolylineTest(AbstractTest):
    @classmethod
    def subject_type(cls):
        return Polyline

    @classmethod
    def common_arguments(cls):
        return ([[0.0, 0.0], [10.0, 0.0], [10.0, 5.0]],), {}

    @Test
    def length(self, subject: Polyline):
        self.assertAlmostEqual(subject.length, 15.0)

    @Test
    def interpolate(self, subject: Polyline):
        for distance, expected in ((-1.0, (0.0, 0.0, 0.0)),
                                   (4.0, (4.0, 0.0, 0.0)),
                                   (12.0, (10.0, 2.0, math.pi / 2)),
                                   (99.0, (10.0, 5.0, math.pi / 2))):
            with self.subTest(distance=distance):
                np.testing.assert_allclose(subject.interpolate(distance), expected, atol=1e-12)

    @Test
    def distance(self, subject: Polyline):
        np.testing.assert_allclose(subject.distance(np.array([[5.0, 2.0, 7.0], [12.0, 3.0, 0.0], [-3.0, -4.0, 0.0]])),
                                   [2.0, 2.0, 5.0])

    @ExceptionTest(ValueError)
    @SubjectArgs([[1.0, 1.0], [1.0, 1.0]])
    def degenerate_path(self, subject: Polyline):
        subject.interpolate(0.0)

    @ExceptionTest(ValueError)
    @SubjectArgs(np.zeros((0, 2)))
    def no_waypoints(self, subject: Polyline):
        pass
