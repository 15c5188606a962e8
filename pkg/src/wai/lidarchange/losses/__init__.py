"""
The unsupervised training objective: a probability-weighted chamfer term
pulling points towards Consistent, a class-balance term pulling them
towards Changed, and a temporal-consistency term between consecutive scans.
"""
from ._ChangeProbabilities import ChangeProbabilities
from ._functions import (
    chamfer_loss,
    class_balance_loss,
    temporal_loss,
    total_loss,
    weighted_chamfer,
    weighted_temporal
)
from ._LossBreakdown import LossBreakdown, LOG_HEADER
from ._LossGeometry import LossGeometry
from ._LossWeights import LossWeights, DESK_SCALE_LAMBDA1, DESK_SCALE_LAMBDA2
