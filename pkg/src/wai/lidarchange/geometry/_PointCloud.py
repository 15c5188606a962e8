from typing import Optional, Iterator, Union, Sequence

import numpy as np

from ._Point3 import Point3

# Frame tags used throughout the library
SENSOR_FRAME = "sensor"
WORLD_FRAME = "world"


class PointCloud:
    """
    A set of 3D points (float64, shape (n, 3)) with optional per-point
    intensity in [0, 1] and a symbolic frame tag. Point order is significant:
    labels, probabilities and range-image indices all refer to it.
    """
    def __init__(self,
                 positions: Union[np.ndarray, Sequence[Sequence[float]]],
                 intensity: Optional[Union[np.ndarray, Sequence[float]]] = None,
                 frame_id: str = SENSOR_FRAME):
        positions = np.array(positions, dtype=np.float64)
        if positions.size == 0:
            positions = positions.reshape(0, 3)

        if positions.ndim != 2 or positions.shape[1] != 3:
            raise ValueError(f"Positions must have shape (n, 3), got {positions.shape}")

        if not np.all(np.isfinite(positions)):
            raise ValueError("Point coordinates must be finite")

        if intensity is not None:
            intensity = np.array(intensity, dtype=np.float64).reshape(-1)

            if len(intensity) != len(positions):
                raise ValueError(f"Expected one intensity value per point ({len(positions)}), "
                                 f"got {len(intensity)}")

            if np.any((intensity < 0.0) | (intensity > 1.0)) or not np.all(np.isfinite(intensity)):
                raise ValueError("Intensity values must lie in [0, 1]")

        self._positions: np.ndarray = positions
        self._intensity: Optional[np.ndarray] = intensity
        self.frame_id: str = frame_id

        # Shared arrays are read-only so clouds behave as values
        self._positions.flags.writeable = False
        if self._intensity is not None:
            self._intensity.flags.writeable = False

    @classmethod
    def empty(cls, with_intensity: bool = False, frame_id: str = SENSOR_FRAME) -> "PointCloud":
        """
        Creates a cloud with no points.
        """
        return PointCloud(np.zeros((0, 3)), np.zeros(0) if with_intensity else None, frame_id)

    @classmethod
    def from_points(cls, points: Sequence[Point3], frame_id: str = SENSOR_FRAME) -> "PointCloud":
        """
        Creates a cloud (without intensity) from individual points.
        """
        return PointCloud([tuple(point) for point in points], None, frame_id)

    @classmethod
    def concatenate(cls, clouds: Sequence["PointCloud"]) -> "PointCloud":
        """
        Joins clouds in order. All clouds must share a frame, and either
        all or none may carry intensity.

        :param clouds:  The clouds to join (at least one).
        :return:        The joined cloud.
        """
        if len(clouds) == 0:
            raise ValueError("Nothing to concatenate")

        frame_ids = {cloud.frame_id for cloud in clouds}
        if len(frame_ids) != 1:
            raise ValueError(f"Can't concatenate clouds from different frames: {sorted(frame_ids)}")

        with_intensity = {cloud.has_intensity for cloud in clouds}
        if len(with_intensity) != 1:
            raise ValueError("Either all or none of the clouds must carry intensity")

        return PointCloud(
            np.concatenate([cloud.positions for cloud in clouds]),
            np.concatenate([cloud.intensity for cloud in clouds]) if with_intensity.pop() else None,
            frame_ids.pop()
        )

    @property
    def positions(self) -> np.ndarray:
        return self._positions

    @property
    def intensity(self) -> Optional[np.ndarray]:
        return self._intensity

    @property
    def has_intensity(self) -> bool:
        return self._intensity is not None

    @property
    def points(self) -> Sequence[Point3]:
        return [Point3(*row) for row in self._positions]

    def __len__(self) -> int:
        return len(self._positions)

    def __iter__(self) -> Iterator[Point3]:
        return (Point3(*row) for row in self._positions)

    def __eq__(self, other):
        if not isinstance(other, PointCloud):
            return False

        if self.frame_id != other.frame_id or self.has_intensity != other.has_intensity:
            return False

        return (np.array_equal(self._positions, other._positions) and
                (not self.has_intensity or np.array_equal(self._intensity, other._intensity)))

    def __repr__(self):
        return f"PointCloud(n={len(self)}, intensity={self.has_intensity}, frame_id={self.frame_id!r})"

    def ranges(self) -> np.ndarray:
        """
        Gets the Euclidean distance of every point from the frame origin.
        """
        return np.sqrt(np.sum(self._positions ** 2, axis=1))

    def subset(self, selection: Union[np.ndarray, Sequence[int]]) -> "PointCloud":
        """
        Selects points by boolean mask or index array, keeping their order.
        """
        selection = np.asarray(selection)
        return PointCloud(self._positions[selection],
                          self._intensity[selection] if self.has_intensity else None,
                          self.frame_id)

    def without_intensity(self) -> "PointCloud":
        """
        Gets the same points with the intensity channel removed.
        """
        return PointCloud(self._positions, None, self.frame_id)

    def with_positions(self, positions: np.ndarray, frame_id: Optional[str] = None) -> "PointCloud":
        """
        Replaces the positions (point count must match), keeping intensity.
        """
        if len(positions) != len(self):
            raise ValueError(f"Expected {len(self)} positions, got {len(positions)}")

        return PointCloud(positions, self._intensity, self.frame_id if frame_id is None else frame_id)
