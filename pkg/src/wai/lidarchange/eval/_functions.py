import itertools
import time
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from .._Label import Label
from ..baseline import sweep_thresholds
from ..dataset import Frame, RepeatSequence
from ..geometry import transform, WORLD_FRAME
from ..logging import root_logger
from ._BaselinePredictor import BaselinePredictor
from ._ConfusionCounts import ConfusionCounts
from ._Corridor import Corridor
from ._EvalReport import EvalReport
from ._Predictor import Predictor
from ._RuntimeStats import RuntimeStats
from ._SequenceEvaluation import SequenceEvaluation

# Thresholds tried when tuning the nearest-neighbour baseline, in metres
DEFAULT_BASELINE_THRESHOLDS = (0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5, 0.75, 1.0)

_logger = root_logger().getChild("eval")


def iou(predicted: np.ndarray, truth: np.ndarray, cls: int = Label.CHANGED) -> float:
    """
    Intersection over union of the points labelled 'cls' in the
    prediction and in the truth; 1 when neither contains any.

    :param predicted:   The predicted labels.
    :param truth:       The true labels, of the same length.
    :param cls:         The class to score.
    :return:            The IoU, in [0, 1].
    """
    predicted = np.asarray(predicted).reshape(-1)
    truth = np.asarray(truth).reshape(-1)

    if len(predicted) != len(truth):
        raise ValueError(f"Got {len(predicted)} predictions for {len(truth)} labels")

    predicted_in_class = predicted == cls
    truly_in_class = truth == cls
    union = int(np.sum(predicted_in_class | truly_in_class))

    return 1.0 if union == 0 else int(np.sum(predicted_in_class & truly_in_class)) / union


def miou(predicted: np.ndarray, truth: np.ndarray) -> float:
    """
    Mean of the Changed and Consistent IoUs.
    """
    return (iou(predicted, truth, Label.CHANGED) + iou(predicted, truth, Label.CONSISTENT)) / 2.0


def confusion(predicted: np.ndarray, truth: np.ndarray) -> ConfusionCounts:
    return ConfusionCounts.of(predicted, truth)


def corridor_filter(frame: Frame, corridor: Corridor) -> np.ndarray:
    """
    Selects the live points inside the planning corridor: lateral
    distance (world frame, in the ground plane) to the taught path of at
    most width/2, and range from the sensor of at most the range limit.

    :param frame:       The frame.
    :param corridor:    The corridor.
    :return:            (n,) boolean mask over the live points.
    """
    if len(frame.live) == 0:
        return np.zeros(0, dtype=bool)

    world = transform(frame.live, frame.pose, WORLD_FRAME)
    lateral = corridor.path.distance(world.positions)

    return (lateral <= corridor.width / 2.0) & (frame.live.ranges() <= corridor.range_limit)


def evaluate_sequence(sequence: RepeatSequence,
                      predictor: Predictor,
                      corridor_width: float = 5.0,
                      range_limit: float = 10.0,
                      name: str = "sequence",
                      note: str = "") -> SequenceEvaluation:
    """
    Runs a predictor over every frame of a sequence and scores it against
    the ground truth, on the full scans and within the corridor. The
    corridor restricts both prediction and truth.

    :param sequence:        The sequence.
    :param predictor:       The method to evaluate.
    :param corridor_width:  Width of the corridor around the taught path, in metres.
    :param range_limit:     Range limit of the corridor, in metres.
    :param name:            The sequence's name in reports.
    :param note:            Free-text note for reports.
    :return:                The evaluation, including per-frame prediction times.
    """
    corridor = Corridor(sequence.path, corridor_width, range_limit)
    counts = ConfusionCounts()
    corridor_counts = ConfusionCounts()
    durations = []

    for frame in sequence:
        start = time.perf_counter()
        predicted = predictor.predict(frame)
        durations.append(time.perf_counter() - start)

        counts += confusion(predicted, frame.truth)
        inside = corridor_filter(frame, corridor)
        corridor_counts += confusion(predicted[inside], frame.truth[inside])

    runtime = RuntimeStats.from_seconds(durations) if len(durations) > 0 else None
    evaluation = SequenceEvaluation(name, predictor.name, counts, corridor_counts, runtime, note)
    _logger.info(str(evaluation))

    return evaluation


def best_baseline_threshold(sequences: Sequence[RepeatSequence],
                            thresholds: Sequence[float] = DEFAULT_BASELINE_THRESHOLDS,
                            corridor_width: float = 5.0,
                            range_limit: float = 10.0,
                            map_voxel: Optional[float] = None,
                            names: Optional[Sequence[str]] = None) -> Tuple[float, EvalReport]:
    """
    Tunes the nearest-neighbour baseline's distance threshold for the
    best pooled IoU_ch over some sequences (the first of equally good
    thresholds wins).

    :param sequences:       The sequences.
    :param thresholds:      The thresholds to try, in metres.
    :param corridor_width:  Width of the corridor around the taught path, in metres.
    :param range_limit:     Range limit of the corridor, in metres.
    :param map_voxel:       Voxel edge to downsample map views to, or None.
    :param names:           The sequences' names in reports.
    :return:                The best threshold and the baseline's report at it.
    """
    if len(thresholds) == 0:
        raise ValueError("Need at least one threshold to sweep")

    if names is None:
        names = [f"sequence{index}" for index in range(len(sequences))]

    thresholds = [float(threshold) for threshold in thresholds]
    indexer = BaselinePredictor(map_voxel=map_voxel)

    counts: Dict[Tuple[int, float], ConfusionCounts] = {}
    corridor_counts: Dict[Tuple[int, float], ConfusionCounts] = {}
    for (sequence_index, sequence), threshold in itertools.product(enumerate(sequences), thresholds):
        counts[(sequence_index, threshold)] = ConfusionCounts()
        corridor_counts[(sequence_index, threshold)] = ConfusionCounts()

    for sequence_index, sequence in enumerate(sequences):
        corridor = Corridor(sequence.path, corridor_width, range_limit)
        for frame in sequence:
            labels = sweep_thresholds(frame.live, indexer.map_index(frame), thresholds)
            inside = corridor_filter(frame, corridor)
            for threshold in thresholds:
                key = (sequence_index, threshold)
                counts[key] += confusion(labels[threshold], frame.truth)
                corridor_counts[key] += confusion(labels[threshold][inside], frame.truth[inside])

    def pooled_iou(threshold: float) -> float:
        return sum((counts[(index, threshold)] for index in range(len(sequences))), ConfusionCounts()).iou_changed

    best = max(thresholds, key=lambda threshold: (pooled_iou(threshold), -thresholds.index(threshold)))
    for threshold in thresholds:
        _logger.debug(f"Baseline threshold {threshold} m: IoU_ch={pooled_iou(threshold):.3f}")

    note = f"threshold {best} m (best of {len(thresholds)})"
    evaluations = [SequenceEvaluation(names[index], "baseline", counts[(index, best)],
                                      corridor_counts[(index, best)], note=note)
                   for index in range(len(sequences))]

    return best, EvalReport("baseline", evaluations, note)


def benchmark_inference(predictor: Predictor,
                        frames: Sequence[Frame],
                        min_samples: int = 100,
                        warmup: int = 1) -> RuntimeStats:
    """
    Times end-to-end prediction, cycling through the frames until enough
    samples are collected.

    :param predictor:       The method to time.
    :param frames:          The frames to predict.
    :param min_samples:     The number of timed predictions.
    :param warmup:          Untimed predictions made first.
    :return:                The per-frame times.
    """
    if len(frames) == 0:
        raise ValueError("Need at least one frame to benchmark")

    if min_samples < 1:
        raise ValueError(f"Need at least one sample, got {min_samples}")

    for frame in itertools.islice(itertools.cycle(frames), warmup):
        predictor.predict(frame)

    durations = []
    for frame in itertools.islice(itertools.cycle(frames), min_samples):
        start = time.perf_counter()
        predictor.predict(frame)
        durations.append(time.perf_counter() - start)

    stats = RuntimeStats.from_seconds(durations)
    _logger.info(f"{predictor.name}: {stats} over {len(stats)} frames")

    return stats
