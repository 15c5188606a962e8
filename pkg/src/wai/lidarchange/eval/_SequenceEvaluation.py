from typing import List, Optional

from ._ConfusionCounts import ConfusionCounts
from ._RuntimeStats import RuntimeStats

# Columns of a report table
REPORT_HEADER = ["sequence", "method", "iou_changed", "corridor_iou_changed", "miou",
                 "runtime_mean_ms", "runtime_std_ms", "note"]


class SequenceEvaluation:
    """
    Evaluation of one method on one sequence: pooled confusion counts
    over all its frames, on the full scans and within the corridor.
    """
    def __init__(self,
                 sequence: str,
                 method: str,
                 counts: ConfusionCounts,
                 corridor_counts: ConfusionCounts,
                 runtime: Optional[RuntimeStats] = None,
                 note: str = ""):
        self.sequence: str = sequence
        self.method: str = method
        self.counts: ConfusionCounts = counts
        self.corridor_counts: ConfusionCounts = corridor_counts
        self.runtime: Optional[RuntimeStats] = runtime
        self.note: str = note

    @property
    def iou_changed(self) -> float:
        return self.counts.iou_changed

    @property
    def corridor_iou_changed(self) -> float:
        return self.corridor_counts.iou_changed

    @property
    def miou(self) -> float:
        return self.counts.miou

    def as_row(self) -> List:
        return [self.sequence, self.method, self.iou_changed, self.corridor_iou_changed, self.miou,
                self.runtime.mean_ms if self.runtime is not None else float("nan"),
                self.runtime.std_ms if self.runtime is not None else float("nan"),
                self.note]

    def __str__(self):
        runtime = f", {self.runtime}" if self.runtime is not None else ""
        return (f"{self.sequence} [{self.method}]: IoU_ch={self.iou_changed:.3f}, "
                f"corridor IoU_ch={self.corridor_iou_changed:.3f}, mIoU={self.miou:.3f}{runtime}")
