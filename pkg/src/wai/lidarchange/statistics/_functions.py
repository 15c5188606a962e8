from numbers import Real
from statistics import median, mean, stdev
from typing import Iterable, Sequence, Tuple


def lower_quartile(data: Iterable[Real]) -> Real:
    """
    Calculates the lower quartile (median of the lower half) of some real values.

    :param data:    The values.
    :return:        The lower quartile.
    """
    ordered = _sorted_non_empty(data)
    return median(ordered[:max(len(ordered) // 2, 1)])


def upper_quartile(data: Iterable[Real]) -> Real:
    """
    Calculates the upper quartile (median of the upper half) of some real values.

    :param data:    The values.
    :return:        The upper quartile.
    """
    ordered = _sorted_non_empty(data)
    return median(ordered[-max(len(ordered) // 2, 1):])


def interquartile_range(data: Iterable[Real]) -> Real:
    """
    Calculates the inter-quartile range of some real values.

    :param data:    The values.
    :return:        The inter-quartile range.
    """
    ordered = _sorted_non_empty(data)
    return upper_quartile(ordered) - lower_quartile(ordered)


def mean_and_std(data: Iterable[Real]) -> Tuple[float, float]:
    """
    Calculates the mean and sample standard deviation of some real values.
    A single value has a standard deviation of zero.

    :param data:    The values.
    :return:        The mean and the standard deviation.
    """
    values = _sorted_non_empty(data)
    return float(mean(values)), float(stdev(values)) if len(values) > 1 else 0.0


def _sorted_non_empty(data: Iterable[Real]) -> Sequence[Real]:
    ordered = sorted(data)
    if len(ordered) == 0:
        raise ValueError("Statistics require at least one value")
    return ordered
