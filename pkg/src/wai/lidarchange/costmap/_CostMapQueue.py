from collections import deque
from typing import Deque

from ._CostMap import CostMap
from ._functions import queue_merge


class CostMapQueue:
    """
    Keeps the most recent cost maps so obstacles stay on the map after
    they enter the sensor's close-range blind spot.
    """
    def __init__(self, depth: int = 5):
        if depth < 1:
            raise ValueError(f"Queue depth must be at least 1, got {depth}")

        self.depth: int = int(depth)
        self._maps: Deque[CostMap] = deque(maxlen=self.depth)

    def __len__(self):
        return len(self._maps)

    def push(self, cost_map: CostMap) -> CostMap:
        """
        Adds the newest map and returns the merged map.
        """
        self._maps.append(cost_map)
        return self.merged()

    def merged(self) -> CostMap:
        return queue_merge(list(self._maps), self.depth)

    def clear(self):
        self._maps.clear()
