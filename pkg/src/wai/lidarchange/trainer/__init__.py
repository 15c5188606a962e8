"""
Unsupervised training of the change-detection network, and fine-tuning
of a pre-trained network on a specific sequence.
"""
from ._functions import train, finetune
from ._OptimiserConfig import OptimiserConfig
from ._PreparedBatch import PreparedBatch
from ._Trainer import StepCallback, Trainer
from ._TrainerConfig import TrainerConfig
from ._TrainingLog import TrainingLog, TRAINING_LOG_HEADER
