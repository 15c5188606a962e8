import contextlib
from typing import Callable, Iterator, List, Optional, Sequence

import numpy as np
import torch

from ..dataset import RepeatSequence, pair_frames
from ..logging import LoggingMixin
from ..losses import ChangeProbabilities, LossBreakdown, LossWeights, total_loss
from ..model import ChangeModel, backward, discard_tape, forward
from ..projection import backproject, scatter_to_pixels
from ._OptimiserConfig import OptimiserConfig
from ._PreparedBatch import PreparedBatch
from ._TrainerConfig import TrainerConfig
from ._TrainingLog import TrainingLog

# Called after every optimiser step with the number of steps taken so far
StepCallback = Callable[[int, ChangeModel], None]


class Trainer(LoggingMixin):
    """
    Fits a model to temporal batches without labels. Each step renders
    both frames of a batch, runs the network on each, spreads the pixel
    probabilities to the points, evaluates the loss, pushes the per-point
    gradients back through the pixels and takes one optimiser step.
    """
    def __init__(self,
                 model: ChangeModel,
                 loss_weights: LossWeights = LossWeights(),
                 optimiser_config: OptimiserConfig = OptimiserConfig(),
                 config: TrainerConfig = TrainerConfig(),
                 seed: int = 0):
        if model.config.shape != config.projection.shape:
            raise ValueError(f"Model expects {model.config.shape} images but the projection renders "
                             f"{config.projection.shape}")

        self.model: ChangeModel = model
        self.loss_weights: LossWeights = loss_weights
        self.optimiser_config: OptimiserConfig = optimiser_config
        self.config: TrainerConfig = config
        self.seed: int = int(seed)
        self.optimiser: torch.optim.Optimizer = optimiser_config.create(model.parameters())

    def prepare(self, sequences: Sequence[RepeatSequence]) -> List[PreparedBatch]:
        """
        Pairs and pre-processes the frames of every sequence.
        """
        if len(sequences) == 0:
            raise ValueError("Need at least one sequence to train on")

        prepared = []
        for sequence in sequences:
            if len(sequence) < 2:
                raise ValueError(f"Training sequences need at least two frames, got {len(sequence)}")

            for batch in pair_frames(sequence.frames, self.config.pair_spacing):
                if len(batch.first.live) == 0 or len(batch.second.live) == 0:
                    self.logger.warning(f"Skipping {batch}: empty scan")
                    continue
                prepared.append(PreparedBatch.of(batch,
                                                 self.config.projection,
                                                 self.config.map_voxel,
                                                 self.config.live_voxel))

        self.logger.info(f"Prepared {len(prepared)} batches from {len(sequences)} sequence(s)")

        return prepared

    def step(self, prepared: PreparedBatch) -> LossBreakdown:
        """
        Takes one optimiser step on a batch. Forward passes that are not
        consumed (because the loss fails, say) are dropped from the
        model's tape before returning.

        :param prepared:    The batch.
        :return:            The loss before the step.
        """
        self.model.train()
        self.optimiser.zero_grad()

        try:
            probabilities = []
            for live_image, map_image in prepared.images:
                logits = forward(self.model, live_image, map_image)
                probabilities.append(ChangeProbabilities(backproject(logits.p_changed, live_image)))

            breakdown = total_loss(prepared.batch, probabilities[0], probabilities[1],
                                   self.loss_weights, prepared.geometry)

            for (live_image, map_image), gradient in zip(prepared.images, (breakdown.gradient0, breakdown.gradient1)):
                backward(self.model, live_image, map_image, scatter_to_pixels(gradient, live_image),
                         self.config.gradient)
        finally:
            for live_image, map_image in prepared.images:
                discard_tape(self.model, live_image, map_image)

        self.optimiser.step()

        return breakdown

    def fit(self, sequences: Sequence[RepeatSequence], callback: Optional[StepCallback] = None) -> TrainingLog:
        """
        Trains until the epoch limit, the step limit or a plateau of the
        epoch-mean total loss.

        :param sequences:   The training sequences.
        :param callback:    Called after every step with the step count and the model.
        :return:            The per-step log.
        """
        with self.torch_settings():
            batches = self.prepare(sequences)
            if len(batches) == 0:
                raise ValueError("No non-empty batches to train on")

            rng = np.random.default_rng(self.seed)
            log = TrainingLog()
            best = np.inf
            stale_epochs = 0
            step = 0

            for epoch in range(self.config.epochs):
                if self._step_limit_reached(step):
                    break

                order = rng.permutation(len(batches)) if self.config.shuffle else np.arange(len(batches))
                epoch_totals = []
                for index in order:
                    if self._step_limit_reached(step):
                        break
                    breakdown = self.step(batches[index])
                    log.append(step, epoch, breakdown)
                    epoch_totals.append(breakdown.total)
                    self.logger.debug(f"Step {step}: {breakdown}")
                    step += 1
                    if callback is not None:
                        callback(step, self.model)

                mean_total = float(np.mean(epoch_totals)) if len(epoch_totals) > 0 else np.inf
                if mean_total < best - self.config.min_improvement:
                    best = mean_total
                    stale_epochs = 0
                else:
                    stale_epochs += 1

                self.logger.info(f"Epoch {epoch}: mean total loss {mean_total:.6f} (best {best:.6f}, "
                                 f"{stale_epochs}/{self.config.patience} without improvement)")

                if stale_epochs >= self.config.patience:
                    self.logger.info(f"Stopping early after epoch {epoch}")
                    break

        return log

    @contextlib.contextmanager
    def torch_settings(self) -> Iterator[None]:
        """
        Seeds torch and applies the configured determinism and thread
        count, restoring the previous determinism and thread count on exit.
        """
        deterministic = torch.are_deterministic_algorithms_enabled()
        threads = torch.get_num_threads()

        torch.manual_seed(self.seed)
        try:
            if self.config.deterministic:
                torch.use_deterministic_algorithms(True)
            if self.config.threads is not None:
                torch.set_num_threads(self.config.threads)
            yield
        finally:
            torch.use_deterministic_algorithms(deterministic)
            torch.set_num_threads(threads)

    def _step_limit_reached(self, step: int) -> bool:
        return self.config.max_steps is not None and step >= self.config.max_steps
