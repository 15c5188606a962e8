"""
Planner-facing output: changed points flattened into an inflated binary
cost grid, and a queue merging recent grids.
"""
from ._CostMap import CostMap, OCCUPIED_CELLS_HEADER
from ._CostMapConfig import CostMapConfig, PLANNING_HORIZON
from ._CostMapQueue import CostMapQueue
from ._functions import inflate, inflation_disc, queue_merge
