from typing import Sequence, Tuple, Union

import numpy as np


class Polyline:
    """
    A planar path through a sequence of (x, y) waypoints, in metres.
    """
    def __init__(self, waypoints: Union[np.ndarray, Sequence[Sequence[float]]]):
        waypoints = np.array(waypoints, dtype=np.float64)

        if waypoints.ndim != 2 or waypoints.shape[1] != 2 or len(waypoints) == 0:
            raise ValueError(f"Waypoints must have shape (k, 2) with k >= 1, got {waypoints.shape}")

        if not np.all(np.isfinite(waypoints)):
            raise ValueError("Waypoints must be finite")

        self.waypoints: np.ndarray = waypoints

        # Cumulative arc-length at each waypoint
        segment_lengths = np.sqrt(np.sum(np.diff(waypoints, axis=0) ** 2, axis=1))
        self._cumulative: np.ndarray = np.concatenate(([0.0], np.cumsum(segment_lengths)))

    def __iter__(self):
        return iter(map(tuple, self.waypoints))

    def __len__(self):
        return len(self.waypoints)

    def __str__(self):
        return f"[{', '.join(f'({x}, {y})' for x, y in self.waypoints)}]"

    def __eq__(self, other):
        return isinstance(other, Polyline) and np.array_equal(self.waypoints, other.waypoints)

    @property
    def length(self) -> float:
        return float(self._cumulative[-1])

    def is_degenerate(self) -> bool:
        """
        Whether the path has zero length.
        """
        return self.length == 0.0

    def interpolate(self, distance: float) -> Tuple[float, float, float]:
        """
        Gets the position and heading at a given arc-length along the path.

        :param distance:    Arc-length from the first waypoint, clamped to [0, length].
        :return:            x, y and heading (radians) at that distance.
        """
        if self.is_degenerate():
            raise ValueError("Can't interpolate along a zero-length path")

        distance = min(max(distance, 0.0), self.length)

        # Find the segment, skipping zero-length ones
        segment = int(np.searchsorted(self._cumulative, distance, side="right")) - 1
        segment = min(segment, len(self.waypoints) - 2)
        while self._cumulative[segment + 1] == self._cumulative[segment]:
            segment -= 1

        start, end = self.waypoints[segment], self.waypoints[segment + 1]
        segment_length = self._cumulative[segment + 1] - self._cumulative[segment]
        fraction = (distance - self._cumulative[segment]) / segment_length
        x, y = start + fraction * (end - start)
        heading = float(np.arctan2(end[1] - start[1], end[0] - start[0]))

        return float(x), float(y), heading

    def distance(self, points: np.ndarray) -> np.ndarray:
        """
        Gets the planar distance from each point to the nearest point on the path.

        :param points:  (n, 2) or (n, 3) positions; any z component is ignored.
        :return:        (n,) distances in metres.
        """
        points = np.asarray(points, dtype=np.float64)
        if len(points) == 0:
            return np.zeros(0)
        points = points.reshape(len(points), -1)[:, :2]

        if len(self.waypoints) == 1:
            return np.sqrt(np.sum((points - self.waypoints[0]) ** 2, axis=1))

        starts = self.waypoints[:-1]
        directions = self.waypoints[1:] - starts
        squared_lengths = np.sum(directions ** 2, axis=1)

        # Parameter of the projection onto each segment, clamped to the segment (n, segments)
        relative = points[:, None, :] - starts[None, :, :]
        with np.errstate(invalid="ignore", divide="ignore"):
            t = np.sum(relative * directions[None, :, :], axis=2) / squared_lengths[None, :]
        t = np.where(squared_lengths[None, :] > 0.0, np.clip(t, 0.0, 1.0), 0.0)

        closest = starts[None, :, :] + t[:, :, None] * directions[None, :, :]
        return np.min(np.sqrt(np.sum((points[:, None, :] - closest) ** 2, axis=2)), axis=1)
