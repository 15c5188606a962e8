from typing import Dict, Optional, Sequence

from ..dataset import RepeatSequence
from ..losses import LossWeights
from ..model import ChangeModel, ModelConfig
from ..trainer import OptimiserConfig, TrainerConfig
from ._Predictor import Predictor
from ._functions import DEFAULT_BASELINE_THRESHOLDS

# The kinds of study run_study knows
STUDY_KINDS = ("voxel_sweep", "loss_ablation", "method_compare", "finetune_curve")


class StudyConfig:
    """
    Inputs and settings shared by the studies.

    :param train_sequences:     Sequences to train models on.
    :param test_sequences:      Sequences to evaluate on.
    :param model_config:        Architecture of trained models.
    :param loss_weights:        Loss weights of trained models (the loss
                                ablation varies them). Defaults to the
                                small-scene weights, matching the
                                synthetic scenes.
    :param optimiser_config:    Optimiser settings.
    :param trainer_config:      Training-loop settings (the voxel sweep varies
                                the voxel sizes).
    :param seed:                Seed of every training run.
    :param map_voxels:          Map voxel sizes of the voxel sweep.
    :param live_voxels:         Live voxel sizes of the voxel sweep.
    :param baseline_thresholds: Thresholds tried for the baseline.
    :param corridor_width:      Corridor width, in metres.
    :param range_limit:         Corridor range limit, in metres.
    :param model:               A trained model for the method comparison,
                                or None to train one.
    :param predictors:          Methods to compare instead of the trained
                                model and the tuned baseline.
    :param benchmark_frames:    Timed frames per method in the comparison
                                (0 to skip timing).
    :param curve_steps:         Steps of each run of the fine-tuning curve.
    :param curve_interval:      Steps between evaluations on the curve.
    :param target_iou:          IoU_ch the fine-tuning curve counts steps to.
    :param curve_seeds:         Seeds of the fine-tuning curve, one
                                pre-training run each.
    :param lr_scale:            Learning-rate factor when fine-tuning.
    """
    def __init__(self,
                 train_sequences: Sequence[RepeatSequence] = (),
                 test_sequences: Sequence[RepeatSequence] = (),
                 model_config: ModelConfig = ModelConfig(),
                 loss_weights: LossWeights = LossWeights.desk_scale(),
                 optimiser_config: OptimiserConfig = OptimiserConfig(),
                 trainer_config: TrainerConfig = TrainerConfig(),
                 seed: int = 0,
                 map_voxels: Sequence[float] = (0.1, 0.2, 0.3),
                 live_voxels: Sequence[float] = (0.05, 0.15, 0.3),
                 baseline_thresholds: Sequence[float] = DEFAULT_BASELINE_THRESHOLDS,
                 corridor_width: float = 5.0,
                 range_limit: float = 10.0,
                 model: Optional[ChangeModel] = None,
                 predictors: Optional[Dict[str, Predictor]] = None,
                 benchmark_frames: int = 0,
                 curve_steps: int = 100,
                 curve_interval: int = 10,
                 target_iou: float = 0.5,
                 curve_seeds: Sequence[int] = (0, 1, 2),
                 lr_scale: float = 0.1):
        if len(map_voxels) == 0 or len(live_voxels) == 0:
            raise ValueError("The voxel sweep needs at least one map and one live voxel size")

        if benchmark_frames < 0:
            raise ValueError(f"Benchmark frame count must be non-negative, got {benchmark_frames}")

        if curve_steps < 0 or curve_interval < 1:
            raise ValueError(f"The fine-tuning curve needs non-negative steps and a positive interval, "
                             f"got {curve_steps} and {curve_interval}")

        if not 0.0 < target_iou <= 1.0:
            raise ValueError(f"Target IoU must be in (0, 1], got {target_iou}")

        if len(curve_seeds) == 0:
            raise ValueError("The fine-tuning curve needs at least one seed")

        if not lr_scale > 0.0:
            raise ValueError(f"Learning-rate scale must be positive, got {lr_scale}")

        self.train_sequences = list(train_sequences)
        self.test_sequences = list(test_sequences)
        self.model_config: ModelConfig = model_config
        self.loss_weights: LossWeights = loss_weights
        self.optimiser_config: OptimiserConfig = optimiser_config
        self.trainer_config: TrainerConfig = trainer_config
        self.seed: int = int(seed)
        self.map_voxels = [float(voxel) for voxel in map_voxels]
        self.live_voxels = [float(voxel) for voxel in live_voxels]
        self.baseline_thresholds = [float(threshold) for threshold in baseline_thresholds]
        self.corridor_width: float = float(corridor_width)
        self.range_limit: float = float(range_limit)
        self.model: Optional[ChangeModel] = model
        self.predictors: Optional[Dict[str, Predictor]] = predictors
        self.benchmark_frames: int = int(benchmark_frames)
        self.curve_steps: int = int(curve_steps)
        self.curve_interval: int = int(curve_interval)
        self.target_iou: float = float(target_iou)
        self.curve_seeds = [int(seed) for seed in curve_seeds]
        self.lr_scale: float = float(lr_scale)
