from typing import List

import numpy as np

# Columns of the per-step training log
LOG_HEADER = ["step", "chamfer", "class", "temporal", "total"]


class LossBreakdown:
    """
    The terms of the total loss for one temporal batch, with the gradient
    of the total with respect to each scan's Changed probabilities.
    """
    def __init__(self,
                 chamfer: float,
                 class_balance: float,
                 temporal: float,
                 total: float,
                 gradient0: np.ndarray,
                 gradient1: np.ndarray):
        self.chamfer: float = float(chamfer)
        self.class_balance: float = float(class_balance)
        self.temporal: float = float(temporal)
        self.total: float = float(total)
        self.gradient0: np.ndarray = gradient0
        self.gradient1: np.ndarray = gradient1

    def as_row(self, step: int) -> List:
        """
        Gets the breakdown as a training-log row (see LOG_HEADER).
        """
        return [step, self.chamfer, self.class_balance, self.temporal, self.total]

    def __str__(self):
        return (f"total={self.total:.6f} (chamfer={self.chamfer:.6f}, class={self.class_balance:.6f}, "
                f"temporal={self.temporal:.6f})")
