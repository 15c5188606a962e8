import os
import tempfile

import numpy as np
import torch

from wai.test import AbstractTest
from wai.test.decorators import Test, ExceptionTest

from wai.lidarchange.model import (
    CHECKPOINT_MAGIC,
    ChangeModel,
    CheckpointFormatError,
    CheckpointSerialiser,
    load_checkpoint,
    save_checkpoint
)

from ._helpers import small_model_config


class CheckpointTest(AbstractTest):
    @classmethod
    def subject_type(cls):
        return ChangeModel

    @classmethod
    def common_arguments(cls):
        return (small_model_config(),), {"seed": 11}

    @Test
    def save_and_load(self, subject: ChangeModel):
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, "model.ckpt")
            save_checkpoint(subject, filename)
            loaded = load_checkpoint(filename)

        self.assertEqual(loaded.config, subject.config)
        self.assertEqual(loaded.seed, 11)
        for (name, a), (_, b) in zip(subject.state_dict().items(), loaded.state_dict().items()):
            with self.subTest(parameter=name):
                self.assertTrue(torch.equal(a, b))

    @Test
    def starts_with_magic(self, subject: ChangeModel):
        data = CheckpointSerialiser().serialise_to_bytes(subject)
        self.assertEqual(data[:len(CHECKPOINT_MAGIC)], CHECKPOINT_MAGIC)

    @ExceptionTest(CheckpointFormatError)
    def wrong_magic(self, subject: ChangeModel):
        data = CheckpointSerialiser().serialise_to_bytes(subject)
        CheckpointSerialiser().deserialise_from_bytes(b"XXXX" + data[4:])

    @ExceptionTest(CheckpointFormatError)
    def truncated(self, subject: ChangeModel):
        data = CheckpointSerialiser().serialise_to_bytes(subject)
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, "model.ckpt")
            with open(filename, "wb") as file:
                file.write(data[:len(data) // 2])
            load_checkpoint(filename)

    @ExceptionTest(CheckpointFormatError)
    def missing_file(self, subject: ChangeModel):
        load_checkpoint(os.path.join(tempfile.gettempdir(), "no-such-checkpoint.ckpt"))

    @Test
    def perturbed_weights_survive(self, subject: ChangeModel):
        with torch.no_grad():
            subject.classifier.bias.add_(0.25)

        loaded = CheckpointSerialiser().deserialise_from_bytes(CheckpointSerialiser().serialise_to_bytes(subject))
        np.testing.assert_array_equal(loaded.classifier.bias.detach().numpy(), [0.25, 0.25])
