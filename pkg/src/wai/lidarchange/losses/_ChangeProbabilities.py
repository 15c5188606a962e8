from typing import Union, Sequence

import numpy as np


class ChangeProbabilities:
    """
    Per-point probability of the Changed class for one scan.
    """
    def __init__(self, p_changed: Union[np.ndarray, Sequence[float]]):
        p_changed = np.array(p_changed, dtype=np.float64).reshape(-1)

        if not np.all(np.isfinite(p_changed)) or np.any((p_changed < 0.0) | (p_changed > 1.0)):
            raise ValueError("Change probabilities must lie in [0, 1]")

        self.p_changed: np.ndarray = p_changed

    @classmethod
    def of(cls, value: Union["ChangeProbabilities", np.ndarray, Sequence[float]]) -> "ChangeProbabilities":
        """
        Wraps an array of probabilities, passing existing instances through.
        """
        return value if isinstance(value, ChangeProbabilities) else ChangeProbabilities(value)

    @property
    def p_consistent(self) -> np.ndarray:
        return 1.0 - self.p_changed

    def __len__(self) -> int:
        return len(self.p_changed)
