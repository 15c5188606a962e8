"""
Classical nearest-neighbour change detection: a live point is Changed
when it is further than a fixed distance from every map point.
"""
from ._BaselineConfig import BaselineConfig
from ._functions import nn_distances, nn_classify, sweep_thresholds
