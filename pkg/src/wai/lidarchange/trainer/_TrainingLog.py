from typing import List

import numpy as np

from ..file import csv
from ..file.csv import CSVFile
from ..losses import LossBreakdown, LOG_HEADER

# Columns of the saved log: the loss breakdown plus the epoch
TRAINING_LOG_HEADER = LOG_HEADER + ["epoch"]


class TrainingLog:
    """
    The loss breakdown of every training step.
    """
    def __init__(self):
        self._rows: List[list] = []

    def __len__(self) -> int:
        return len(self._rows)

    def append(self, step: int, epoch: int, breakdown: LossBreakdown):
        self._rows.append(breakdown.as_row(step) + [epoch])

    def column(self, name: str) -> np.ndarray:
        return np.array([row[TRAINING_LOG_HEADER.index(name)] for row in self._rows])

    @property
    def totals(self) -> np.ndarray:
        return self.column("total").astype(np.float64)

    def epoch_means(self) -> np.ndarray:
        """
        Gets the mean total loss of every logged epoch, in epoch order.
        """
        if len(self._rows) == 0:
            return np.zeros(0)

        epochs = self.column("epoch").astype(np.int64)
        return np.array([np.mean(self.totals[epochs == epoch]) for epoch in np.unique(epochs)])

    def to_csv(self) -> CSVFile:
        return CSVFile(TRAINING_LOG_HEADER, self._rows, [int, float, float, float, float, int])

    def save(self, filename: str):
        csv.save(self.to_csv(), filename)
