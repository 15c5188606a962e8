from typing import Tuple, Optional, Union, Sequence

import numpy as np

from ..geometry import PointCloud, SpatialIndex
from ._ChangeProbabilities import ChangeProbabilities
from ._LossBreakdown import LossBreakdown
from ._LossGeometry import LossGeometry
from ._LossWeights import LossWeights

# Anything accepted as a vector of probabilities
ProbabilitiesLike = Union[ChangeProbabilities, np.ndarray, Sequence[float]]


def weighted_chamfer(distances: np.ndarray, p: ProbabilitiesLike) -> Tuple[float, np.ndarray]:
    """
    Chamfer cost of a scan whose nearest-map distances are known:
    (1/n) sum (1 - p_i) d_i.

    :param distances:   (n,) distance of each live point to the map.
    :param p:           (n,) Changed probabilities.
    :return:            The value and its gradient with respect to p.
    """
    p = ChangeProbabilities.of(p)
    n = _checked_length(distances, p)
    return float(np.sum(p.p_consistent * distances) / n), -distances / n


def weighted_temporal(first_to_second: np.ndarray,
                      p0: ProbabilitiesLike,
                      second_to_first: np.ndarray,
                      p1: ProbabilitiesLike) -> Tuple[float, np.ndarray, np.ndarray]:
    """
    Bidirectional probability-weighted chamfer between two scans whose
    cross distances are known.

    :return:    The value and its gradients with respect to p0 and p1.
    """
    p0, p1 = ChangeProbabilities.of(p0), ChangeProbabilities.of(p1)
    n0 = _checked_length(first_to_second, p0)
    n1 = _checked_length(second_to_first, p1)

    value = np.sum(p0.p_changed * first_to_second) / n0 + np.sum(p1.p_changed * second_to_first) / n1
    return float(value), first_to_second / n0, second_to_first / n1


def chamfer_loss(S: PointCloud, M_index: SpatialIndex, p: ProbabilitiesLike) -> Tuple[float, np.ndarray]:
    """
    Chamfer distance from a live scan to the map, with each point weighted
    by its probability of being Consistent.

    :param S:           The live scan.
    :param M_index:     Spatial index over the map (same frame as S).
    :param p:           Changed probability of each live point.
    :return:            The value and its gradient with respect to p (-d_i / n).
    """
    p = ChangeProbabilities.of(p)
    if len(p) != len(S):
        raise ValueError(f"Got {len(p)} probabilities for {len(S)} points")

    distances, _ = M_index.nearest_many(S.positions)
    return weighted_chamfer(distances, p)


def class_balance_loss(p: ProbabilitiesLike) -> Tuple[float, np.ndarray]:
    """
    Mean Changed probability over a scan.

    :param p:   Changed probability of each point.
    :return:    The value and its gradient (1/n everywhere).
    """
    p = ChangeProbabilities.of(p)
    n = len(p)
    if n == 0:
        raise ValueError("Class-balance loss of an empty scan")

    return float(np.sum(p.p_changed) / n), np.full(n, 1.0 / n)


def temporal_loss(S0: PointCloud,
                  p0: ProbabilitiesLike,
                  S1: PointCloud,
                  p1: ProbabilitiesLike) -> Tuple[float, np.ndarray, np.ndarray]:
    """
    Temporal-consistency loss between two scans expressed in a common frame:
    a point predicted Changed in one scan is penalised by its distance to
    the other scan.

    :return:    The value and its gradients with respect to p0 and p1.
    """
    if len(S0) == 0 or len(S1) == 0:
        raise ValueError("Temporal loss needs two non-empty scans")

    first_to_second, _ = SpatialIndex(S1).nearest_many(S0.positions)
    second_to_first, _ = SpatialIndex(S0).nearest_many(S1.positions)

    return weighted_temporal(first_to_second, p0, second_to_first, p1)


def total_loss(batch,
               p0: ProbabilitiesLike,
               p1: ProbabilitiesLike,
               w: LossWeights = LossWeights(),
               geometry: Optional[LossGeometry] = None) -> LossBreakdown:
    """
    Evaluates the total loss of a temporal batch. The chamfer and
    class-balance terms are averaged over the batch's two (map, scan)
    pairs; the temporal term links the two scans.

    :param batch:       The TemporalBatch.
    :param p0:          Changed probabilities of the first scan's points.
    :param p1:          Changed probabilities of the second scan's points.
    :param w:           The loss weights.
    :param geometry:    Pre-computed distances for the batch, or None to compute them.
    :return:            The loss breakdown, including per-point gradients.
    """
    if geometry is None:
        geometry = LossGeometry.of(batch)

    chamfer0, chamfer_gradient0 = weighted_chamfer(geometry.scan_to_map0, p0)
    chamfer1, chamfer_gradient1 = weighted_chamfer(geometry.scan_to_map1, p1)
    class0, class_gradient0 = class_balance_loss(p0)
    class1, class_gradient1 = class_balance_loss(p1)
    temporal, temporal_gradient0, temporal_gradient1 = weighted_temporal(
        geometry.first_to_second, p0, geometry.second_to_first, p1
    )

    chamfer = 0.5 * (chamfer0 + chamfer1)
    class_balance = 0.5 * (class0 + class1)
    total = w.chamfer * chamfer + w.lambda1 * class_balance + w.lambda2 * temporal

    gradient0 = 0.5 * w.chamfer * chamfer_gradient0 + 0.5 * w.lambda1 * class_gradient0 + w.lambda2 * temporal_gradient0
    gradient1 = 0.5 * w.chamfer * chamfer_gradient1 + 0.5 * w.lambda1 * class_gradient1 + w.lambda2 * temporal_gradient1

    return LossBreakdown(chamfer, class_balance, temporal, total, gradient0, gradient1)


def _checked_length(distances: np.ndarray, p: ChangeProbabilities) -> int:
    if len(distances) != len(p):
        raise ValueError(f"Got {len(p)} probabilities for {len(distances)} points")

    if len(p) == 0:
        raise ValueError("Loss of an empty scan")

    return len(p)
