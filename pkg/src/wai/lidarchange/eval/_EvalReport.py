from typing import List, Sequence

from ..file import csv
from ..file.csv import CSVFile
from ._ConfusionCounts import ConfusionCounts
from ._SequenceEvaluation import SequenceEvaluation, REPORT_HEADER


class EvalReport:
    """
    Evaluations of one method over several sequences, with the counts
    pooled across them.
    """
    def __init__(self, method: str, evaluations: Sequence[SequenceEvaluation], note: str = ""):
        self.method: str = method
        self.evaluations: List[SequenceEvaluation] = list(evaluations)
        self.note: str = note

    @property
    def counts(self) -> ConfusionCounts:
        return sum((evaluation.counts for evaluation in self.evaluations), ConfusionCounts())

    @property
    def corridor_counts(self) -> ConfusionCounts:
        return sum((evaluation.corridor_counts for evaluation in self.evaluations), ConfusionCounts())

    @property
    def iou_changed(self) -> float:
        return self.counts.iou_changed

    @property
    def corridor_iou_changed(self) -> float:
        return self.corridor_counts.iou_changed

    @property
    def miou(self) -> float:
        return self.counts.miou

    def to_csv(self) -> CSVFile:
        """
        One row per sequence plus a pooled 'all' row.
        """
        table = CSVFile(REPORT_HEADER, types=[str, str, float, float, float, float, float, str])
        for evaluation in self.evaluations:
            table.append(evaluation.as_row())
        table.append(["all", self.method, self.iou_changed, self.corridor_iou_changed, self.miou,
                      float("nan"), float("nan"), self.note])
        return table

    def save(self, filename: str):
        csv.save(self.to_csv(), filename)

    def __str__(self):
        lines = [str(evaluation) for evaluation in self.evaluations]
        lines.append(f"all [{self.method}]: IoU_ch={self.iou_changed:.3f}, "
                     f"corridor IoU_ch={self.corridor_iou_changed:.3f}, mIoU={self.miou:.3f}"
                     + (f" ({self.note})" if self.note else ""))
        return "\n".join(lines)
