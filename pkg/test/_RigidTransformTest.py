import math

import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, SubjectArgs, ExceptionTest

from wai.lidarchange.geometry import RigidTransform


class RigidTransformTest(AbstractTest):
    @classmethod
    def subject_type(cls):
        return RigidTransform.from_yaw

    @classmethod
    def common_arguments(cls):
        return (math.pi / 2, (1.0, 2.0, 3.0)), {}

    @Test
    def apply(self, subject: RigidTransform):
        np.testing.assert_allclose(subject.apply(np.array([[1.0, 0.0, 0.0]])), [[1.0, 3.0, 3.0]], atol=1e-12)

    @Test
    def yaw_and_translation(self, subject: RigidTransform):
        self.assertAlmostEqual(subject.yaw, math.pi / 2)
        np.testing.assert_array_equal(subject.translation, [1.0, 2.0, 3.0])

    @Test
    def compose_with_inverse(self, subject: RigidTransform):
        self.assertTrue(np.allclose((subject @ subject.inverse()).as_row(), RigidTransform.identity().as_row()))

    @Test
    def row_round_trip(self, subject: RigidTransform):
        self.assertEqual(RigidTransform.from_row(subject.as_row()), subject)

    @ExceptionTest(ValueError)
    def non_orthonormal(self, subject: RigidTransform):
        RigidTransform(np.diag([1.0, 2.0, 1.0]), (0.0, 0.0, 0.0))

    @ExceptionTest(ValueError)
    def reflection(self, subject: RigidTransform):
        RigidTransform(np.diag([1.0, 1.0, -1.0]), (0.0, 0.0, 0.0))

    @Test
    @SubjectArgs(0.0)
    def zero_yaw_is_identity(self, subject: RigidTransform):
        self.assertTrue(subject.is_identity())
