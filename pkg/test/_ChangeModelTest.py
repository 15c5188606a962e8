import numpy as np
import torch

from wai.test import AbstractTest
from wai.test.decorators import Test, SubjectArgs, ExceptionTest

from wai.lidarchange import InvalidStateError, Label
from wai.lidarchange.model import (
    ChangeModel,
    ModelConfig,
    PixelLogits,
    EXACT_GRADIENT,
    NON_SATURATING_GRADIENT,
    backward,
    forward,
    parameter_count,
    predict_labels
)
from wai.lidarchange.projection import ProjectionConfig, RangeImage

from ._helpers import small_model_config


def random_image(config: ProjectionConfig, seed: int) -> RangeImage:
    """
    A range image with random ranges and a few empty pixels.
    """
    rng = np.random.default_rng(seed)
    ranges = rng.uniform(0.5, config.max_range, config.shape)
    ranges[rng.random(config.shape) < 0.2] = 0.0
    index_map = np.where(ranges > 0.0, 0, -1)
    return RangeImage(ranges, index_map, np.zeros(1, dtype=np.int64), config)


class ChangeModelTest(AbstractTest):
    """
    Tests the network, its forward/backward helpers and its invariances.
    """
    @classmethod
    def subject_type(cls):
        return ChangeModel

    @classmethod
    def common_arguments(cls):
        return (small_model_config(dtype="float64"),), {"seed": 3}

    @Test
    def default_parameter_count(self, subject: ChangeModel):
        self.assertEqual(parameter_count(ChangeModel(ModelConfig())), 486978)

    @Test
    def output_shape(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        logits = forward(subject, random_image(projection, 0), random_image(projection, 1), retain_tape=False)

        self.assertIsInstance(logits, PixelLogits)
        self.assertEqual(logits.shape, (8, 64))
        np.testing.assert_allclose(np.sum(logits.probabilities, axis=2), 1.0)

    @ExceptionTest(ValueError)
    def wrong_image_shape(self, subject: ChangeModel):
        projection = ProjectionConfig(16, 64)
        forward(subject, random_image(projection, 0), random_image(projection, 1))

    @ExceptionTest(ValueError)
    def height_not_multiple_of_eight(self, subject: ChangeModel):
        ModelConfig(height=12)

    @Test
    def same_seed_same_weights(self, subject: ChangeModel):
        twin = ChangeModel(small_model_config(dtype="float64"), seed=3)
        for (name, a), (_, b) in zip(subject.state_dict().items(), twin.state_dict().items()):
            with self.subTest(parameter=name):
                self.assertTrue(torch.equal(a, b))

    @Test
    def initial_weights_within_bounds(self, subject: ChangeModel):
        for module in subject.modules():
            if isinstance(module, torch.nn.Conv2d):
                fan_in = module.in_channels * module.kernel_size[0] * module.kernel_size[1]
                self.assertLessEqual(float(module.weight.abs().max()), np.sqrt(6.0 / fan_in))
                self.assertEqual(float(module.bias.abs().max()), 0.0)

    @Test
    def predict_threshold_ties_are_consistent(self, subject: ChangeModel):
        np.testing.assert_array_equal(predict_labels(np.array([[0.2, 0.5, 0.51]])),
                                      [[Label.CONSISTENT, Label.CONSISTENT, Label.CHANGED]])

    @Test
    def predict_from_logits(self, subject: ChangeModel):
        logits = PixelLogits(np.array([[[0.0, 1.0], [1.0, 0.0]]]))
        np.testing.assert_array_equal(predict_labels(logits), [[Label.CHANGED, Label.CONSISTENT]])

    @Test
    def backward_matches_finite_differences(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        live, map = random_image(projection, 0), random_image(projection, 1)
        weights = np.random.default_rng(2).normal(size=projection.shape)

        def objective() -> float:
            with torch.no_grad():
                return float(np.sum(weights * forward(subject, live, map).p_changed))

        forward(subject, live, map)
        gradients = backward(subject, live, map, weights)

        step = 1e-6
        for name, parameter in subject.named_parameters():
            flat = parameter.data.view(-1)
            for position in range(flat.numel()):
                original = float(flat[position])
                flat[position] = original + step
                above = objective()
                flat[position] = original - step
                below = objective()
                flat[position] = original

                with self.subTest(parameter=name, position=position):
                    numeric = (above - below) / (2.0 * step)
                    analytic = float(gradients[name].view(-1)[position])
                    self.assertAlmostEqual(numeric, analytic, delta=1e-5 * max(1.0, abs(analytic)))

    @Test
    def zero_parameters_give_even_odds(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        with torch.no_grad():
            for parameter in subject.parameters():
                parameter.zero_()
            logits = forward(subject, random_image(projection, 0), random_image(projection, 1))

        np.testing.assert_array_equal(logits.p_changed, np.full(projection.shape, 0.5))

    @Test
    def non_saturating_gradient_rescales_exact_one(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        live, map = random_image(projection, 0), random_image(projection, 1)
        weights = np.random.default_rng(4).normal(size=projection.shape)

        p_changed = forward(subject, live, map).p_changed
        non_saturating = backward(subject, live, map, weights, NON_SATURATING_GRADIENT)

        # The same step as the exact gradient of a per-pixel rescaled objective
        rescaled = np.where(weights > 0.0, weights / (1.0 - p_changed), weights / p_changed)
        forward(subject, live, map)
        exact = backward(subject, live, map, rescaled, EXACT_GRADIENT)

        for name in exact:
            with self.subTest(parameter=name):
                self.assertTrue(torch.allclose(non_saturating[name], exact[name], rtol=1e-9, atol=1e-12))

    @Test
    def non_saturating_gradient_survives_saturation(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        live, map = random_image(projection, 0), random_image(projection, 1)
        with torch.no_grad():
            for parameter in subject.parameters():
                parameter.zero_()
            subject.classifier.bias[1] = 40.0

        ones = np.ones(projection.shape)
        forward(subject, live, map)
        exact = backward(subject, live, map, ones, EXACT_GRADIENT)
        forward(subject, live, map)
        non_saturating = backward(subject, live, map, ones, NON_SATURATING_GRADIENT)

        self.assertLess(float(exact["classifier.bias"].abs().max()), 1e-12)
        np.testing.assert_allclose(non_saturating["classifier.bias"].numpy(), [-512.0, 512.0])

    @ExceptionTest(ValueError)
    def unknown_gradient_mode(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        live, map = random_image(projection, 0), random_image(projection, 1)
        forward(subject, live, map)
        backward(subject, live, map, np.ones(projection.shape), "bogus")

    @Test
    def backward_accumulates_into_grad(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        live, map = random_image(projection, 0), random_image(projection, 1)
        ones = np.ones(projection.shape)

        forward(subject, live, map)
        first = backward(subject, live, map, ones)
        forward(subject, live, map)
        backward(subject, live, map, ones)

        name, parameter = next(iter(subject.named_parameters()))
        self.assertTrue(torch.allclose(parameter.grad, 2.0 * first[name]))
        self.assertFalse(subject.has_tape())

    @ExceptionTest(InvalidStateError)
    def backward_without_forward(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        backward(subject, random_image(projection, 0), random_image(projection, 1), np.ones(projection.shape))

    @ExceptionTest(InvalidStateError)
    def no_tape_under_no_grad(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        live, map = random_image(projection, 0), random_image(projection, 1)
        with torch.no_grad():
            forward(subject, live, map)
        backward(subject, live, map, np.ones(projection.shape))

    @Test
    def shift_equivariant_by_eight_columns(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 64)
        live, map = random_image(projection, 0), random_image(projection, 1)

        def shifted(image: RangeImage) -> RangeImage:
            return RangeImage(np.roll(image.ranges, 8, axis=1), np.roll(image.index_map, 8, axis=1),
                              image.pixel_of_point, projection)

        with torch.no_grad():
            original = forward(subject, live, map).scores
            moved = forward(subject, shifted(live), shifted(map)).scores

        np.testing.assert_allclose(moved, np.roll(original, 8, axis=1), atol=1e-12)

    @Test
    @SubjectArgs(ModelConfig(height=8, width=256, encoder_channels=(2, 2, 2, 2), dtype="float64"))
    def receptive_field_is_local(self, subject: ChangeModel):
        projection = ProjectionConfig(8, 256)
        live, map = random_image(projection, 0), random_image(projection, 1)
        bumped_ranges = live.ranges.copy()
        bumped_ranges[4, 0] += 3.0
        bumped = RangeImage(bumped_ranges, live.index_map, live.pixel_of_point, projection)

        with torch.no_grad():
            original = forward(subject, live, map).scores
            changed = forward(subject, bumped, map).scores

        # Columns far from column 0, going around the wrap
        far = slice(96, 161)
        np.testing.assert_allclose(changed[:, far], original[:, far], atol=1e-12)
