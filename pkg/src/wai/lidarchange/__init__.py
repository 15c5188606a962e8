"""
Unsupervised change detection for LiDAR scans: labels every point of a
live scan as Changed or Consistent with respect to a prior map.
"""
from ._DegeneratePointError import DegeneratePointError
from ._EmptyMapError import EmptyMapError
from ._InvalidStateError import InvalidStateError
from ._Label import Label, LABEL_DTYPE
