import numpy as np
from scipy.special import softmax


class PixelLogits:
    """
    (H, W, 2) pre-softmax class scores; index 1 is Changed.
    """
    def __init__(self, scores: np.ndarray):
        scores = np.asarray(scores, dtype=np.float64)

        if scores.ndim != 3 or scores.shape[2] != 2:
            raise ValueError(f"Logits must have shape (H, W, 2), got {scores.shape}")

        if not np.all(np.isfinite(scores)):
            raise ValueError("Logits must be finite")

        self.scores: np.ndarray = scores

    @property
    def shape(self):
        return self.scores.shape[:2]

    @property
    def probabilities(self) -> np.ndarray:
        """
        The (H, W, 2) softmax over the class axis.
        """
        return softmax(self.scores, axis=2)

    @property
    def p_changed(self) -> np.ndarray:
        """
        The (H, W) probability of the Changed class.
        """
        return self.probabilities[:, :, 1]
