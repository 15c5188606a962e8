import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, SubjectArgs, ExceptionTest

from wai.lidarchange import EmptyMapError, Label
from wai.lidarchange.baseline import BaselineConfig, nn_classify, nn_distances, sweep_thresholds
from wai.lidarchange.geometry import PointCloud, SpatialIndex

from ._helpers import make_frame


class BaselineTest(AbstractTest):
    @classmethod
    def subject_type(cls):
        return BaselineConfig

    @Test
    def default_threshold(self, subject: BaselineConfig):
        self.assertEqual(subject.distance_threshold, 0.3)

    @ExceptionTest(ValueError)
    @SubjectArgs(0.0)
    def zero_threshold(self, subject: BaselineConfig):
        pass

    @Test
    def classify(self, subject: BaselineConfig):
        index = SpatialIndex(PointCloud([[0.0, 0.0, 0.0]]))
        cloud = PointCloud([[0.1, 0.0, 0.0], [0.25, 0.0, 0.0], [0.0, 0.5, 0.0]])

        np.testing.assert_allclose(nn_distances(cloud, index), [0.1, 0.25, 0.5])
        np.testing.assert_array_equal(nn_classify(cloud, index, subject),
                                      [Label.CONSISTENT, Label.CONSISTENT, Label.CHANGED])

    @Test
    def separates_hand_made_frame(self, subject: BaselineConfig):
        frame = make_frame()
        labels = nn_classify(frame.live, SpatialIndex(frame.map_view), subject)
        np.testing.assert_array_equal(labels, frame.truth)

    @Test
    def larger_thresholds_flag_fewer_points(self, subject: BaselineConfig):
        rng = np.random.default_rng(4)
        index = SpatialIndex(PointCloud(rng.uniform(-5.0, 5.0, (300, 3))))
        cloud = PointCloud(rng.uniform(-6.0, 6.0, (400, 3)))
        thresholds = [0.05, 0.1, 0.2, 0.4, 0.8, 1.6]

        swept = sweep_thresholds(cloud, index, thresholds)
        changed = [int(np.sum(swept[threshold])) for threshold in thresholds]
        self.assertEqual(changed, sorted(changed, reverse=True))
        for threshold in thresholds:
            np.testing.assert_array_equal(swept[threshold], nn_classify(cloud, index, BaselineConfig(threshold)))

    @ExceptionTest(EmptyMapError)
    def empty_map(self, subject: BaselineConfig):
        nn_classify(PointCloud([[1.0, 0.0, 0.0]]), SpatialIndex(PointCloud.empty()), subject)
