"""
Scoring of change detection against ground truth: IoU of the Changed
class, mean IoU, IoU within the planning corridor, runtime statistics
and the comparative studies.
"""
from ._BaselinePredictor import BaselinePredictor
from ._ConfusionCounts import ConfusionCounts
from ._Corridor import Corridor
from ._EvalReport import EvalReport
from ._functions import (
    iou,
    miou,
    confusion,
    corridor_filter,
    evaluate_sequence,
    best_baseline_threshold,
    benchmark_inference,
    DEFAULT_BASELINE_THRESHOLDS
)
from ._ModelPredictor import ModelPredictor
from ._Predictor import Predictor
from ._run_study import run_study
from ._RuntimeStats import RuntimeStats
from ._SequenceEvaluation import SequenceEvaluation, REPORT_HEADER
from ._StudyConfig import StudyConfig, STUDY_KINDS
from ._StudyRunner import StudyRunner, ABLATION_ROWS
