import copy
from typing import Optional, Sequence, Tuple, Union

from ..dataset import RepeatSequence
from ..losses import LossWeights
from ..model import ChangeModel, ModelConfig, load_checkpoint
from ._OptimiserConfig import OptimiserConfig
from ._Trainer import StepCallback, Trainer
from ._TrainerConfig import TrainerConfig
from ._TrainingLog import TrainingLog


def train(sequences: Sequence[RepeatSequence],
          model_config: ModelConfig = ModelConfig(),
          loss_weights: LossWeights = LossWeights(),
          optimiser_config: OptimiserConfig = OptimiserConfig(),
          trainer_config: TrainerConfig = TrainerConfig(),
          seed: int = 0,
          callback: Optional[StepCallback] = None) -> Tuple[ChangeModel, TrainingLog]:
    """
    Trains a freshly initialised model.

    :param sequences:           The training sequences.
    :param model_config:        The architecture.
    :param loss_weights:        The loss weights.
    :param optimiser_config:    The optimiser settings.
    :param trainer_config:      The training-loop settings.
    :param seed:                Seeds initialisation and batch order.
    :param callback:            Called after every step with the step count and the model.
    :return:                    The trained model and the training log.
    """
    model = ChangeModel(model_config, seed)
    log = Trainer(model, loss_weights, optimiser_config, trainer_config, seed).fit(sequences, callback)
    return model, log


def finetune(checkpoint: Union[str, ChangeModel],
             sequences: Sequence[RepeatSequence],
             lr_scale: float = 0.1,
             loss_weights: LossWeights = LossWeights(),
             optimiser_config: OptimiserConfig = OptimiserConfig(),
             trainer_config: TrainerConfig = TrainerConfig(),
             seed: int = 0,
             model_config: Optional[ModelConfig] = None,
             callback: Optional[StepCallback] = None) -> Tuple[ChangeModel, TrainingLog]:
    """
    Continues training a pre-trained model at a reduced learning rate.
    The checkpoint itself is left untouched.

    :param checkpoint:          The pre-trained model, or the file it's stored in.
    :param sequences:           The sequences to fine-tune on.
    :param lr_scale:            Factor applied to the optimiser's learning rate.
    :param loss_weights:        The loss weights.
    :param optimiser_config:    The base optimiser settings.
    :param trainer_config:      The training-loop settings.
    :param seed:                Seeds the batch order.
    :param model_config:        The architecture the caller expects, checked
                                against the checkpoint's if given.
    :param callback:            Called after every step with the step count and the model.
    :return:                    The fine-tuned model and the training log.
    """
    model = load_checkpoint(checkpoint) if isinstance(checkpoint, str) else checkpoint

    if model_config is not None and model_config != model.config:
        raise ValueError(f"Checkpoint architecture {model.config} doesn't match the requested {model_config}")

    if model.config.shape != trainer_config.projection.shape:
        raise ValueError(f"Checkpoint expects {model.config.shape} images but the projection renders "
                         f"{trainer_config.projection.shape}")

    model.clear_tape()
    model = copy.deepcopy(model)

    trainer = Trainer(model, loss_weights, optimiser_config.scaled(lr_scale), trainer_config, seed)
    log = trainer.fit(sequences, callback)
    return model, log
