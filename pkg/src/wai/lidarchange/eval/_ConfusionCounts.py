import numpy as np

from .._Label import Label


def _ratio(numerator: int, denominator: int) -> float:
    # A class absent from both prediction and truth is perfectly segmented
    return 1.0 if denominator == 0 else numerator / denominator


class ConfusionCounts:
    """
    Two-class confusion counts, Changed being the positive class.
    Counts add, so frames and sequences can be pooled.
    """
    def __init__(self,
                 true_positive: int = 0,
                 false_positive: int = 0,
                 false_negative: int = 0,
                 true_negative: int = 0):
        if min(true_positive, false_positive, false_negative, true_negative) < 0:
            raise ValueError("Confusion counts must be non-negative")

        self.true_positive: int = int(true_positive)
        self.false_positive: int = int(false_positive)
        self.false_negative: int = int(false_negative)
        self.true_negative: int = int(true_negative)

    @classmethod
    def of(cls, predicted: np.ndarray, truth: np.ndarray) -> "ConfusionCounts":
        """
        Counts the outcomes of a labelling.

        :param predicted:   The predicted labels.
        :param truth:       The true labels, of the same length.
        :return:            The counts.
        """
        predicted = np.asarray(predicted).reshape(-1)
        truth = np.asarray(truth).reshape(-1)

        if len(predicted) != len(truth):
            raise ValueError(f"Got {len(predicted)} predictions for {len(truth)} labels")

        predicted_changed = predicted == Label.CHANGED
        truly_changed = truth == Label.CHANGED

        return ConfusionCounts(int(np.sum(predicted_changed & truly_changed)),
                               int(np.sum(predicted_changed & ~truly_changed)),
                               int(np.sum(~predicted_changed & truly_changed)),
                               int(np.sum(~predicted_changed & ~truly_changed)))

    @property
    def total(self) -> int:
        return self.true_positive + self.false_positive + self.false_negative + self.true_negative

    @property
    def iou_changed(self) -> float:
        return _ratio(self.true_positive, self.true_positive + self.false_positive + self.false_negative)

    @property
    def iou_consistent(self) -> float:
        return _ratio(self.true_negative, self.true_negative + self.false_positive + self.false_negative)

    @property
    def miou(self) -> float:
        return (self.iou_changed + self.iou_consistent) / 2.0

    @property
    def predicted_changed_fraction(self) -> float:
        return _ratio(self.true_positive + self.false_positive, self.total) if self.total > 0 else 0.0

    def __add__(self, other: "ConfusionCounts") -> "ConfusionCounts":
        return ConfusionCounts(self.true_positive + other.true_positive,
                               self.false_positive + other.false_positive,
                               self.false_negative + other.false_negative,
                               self.true_negative + other.true_negative)

    def __eq__(self, other):
        return isinstance(other, ConfusionCounts) and self.as_tuple() == other.as_tuple()

    def as_tuple(self):
        return self.true_positive, self.false_positive, self.false_negative, self.true_negative

    def __repr__(self):
        return (f"ConfusionCounts(tp={self.true_positive}, fp={self.false_positive}, "
                f"fn={self.false_negative}, tn={self.true_negative})")
