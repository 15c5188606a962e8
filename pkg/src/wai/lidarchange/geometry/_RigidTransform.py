import math
from typing import Sequence, Union

import numpy as np

# Tolerance on orthonormality and determinant of rotation matrices
ROTATION_TOLERANCE = 1e-9


class RigidTransform:
    """
    A proper rigid-body transform p' = R·p + t, with R orthonormal and
    det(R) = +1. Poses map sensor-frame points into the world frame.
    """
    def __init__(self,
                 rotation: Union[np.ndarray, Sequence[Sequence[float]]],
                 translation: Union[np.ndarray, Sequence[float]]):
        rotation = np.array(rotation, dtype=np.float64)
        translation = np.array(translation, dtype=np.float64).reshape(-1)

        if rotation.shape != (3, 3):
            raise ValueError(f"Rotation must be 3x3, got {rotation.shape}")

        if translation.shape != (3,):
            raise ValueError(f"Translation must have 3 components, got {translation.shape}")

        if not (np.all(np.isfinite(rotation)) and np.all(np.isfinite(translation))):
            raise ValueError("Transform components must be finite")

        if not np.allclose(rotation @ rotation.T, np.eye(3), rtol=0.0, atol=ROTATION_TOLERANCE):
            raise ValueError("Rotation matrix is not orthonormal")

        if abs(np.linalg.det(rotation) - 1.0) > ROTATION_TOLERANCE:
            raise ValueError("Rotation matrix must have determinant +1")

        self._rotation: np.ndarray = rotation
        self._translation: np.ndarray = translation
        self._rotation.flags.writeable = False
        self._translation.flags.writeable = False

    @classmethod
    def identity(cls) -> "RigidTransform":
        return RigidTransform(np.eye(3), np.zeros(3))

    @classmethod
    def from_translation(cls, x: float, y: float, z: float) -> "RigidTransform":
        return RigidTransform(np.eye(3), (x, y, z))

    @classmethod
    def from_yaw(cls, yaw: float, translation: Sequence[float] = (0.0, 0.0, 0.0)) -> "RigidTransform":
        """
        Creates a transform rotating by 'yaw' radians about the z-axis,
        followed by a translation.
        """
        c, s = math.cos(yaw), math.sin(yaw)
        return RigidTransform(((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0)), translation)

    @classmethod
    def from_row(cls, values: Sequence[float]) -> "RigidTransform":
        """
        Inverse of as_row.

        :param values:  The 9 row-major rotation entries followed by the translation.
        """
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (12,):
            raise ValueError(f"Expected 12 transform values, got {values.shape}")
        return RigidTransform(values[:9].reshape(3, 3), values[9:])

    @property
    def rotation(self) -> np.ndarray:
        return self._rotation

    @property
    def translation(self) -> np.ndarray:
        return self._translation

    @property
    def yaw(self) -> float:
        """
        The heading of the transformed x-axis in the xy-plane, in radians.
        """
        return math.atan2(self._rotation[1, 0], self._rotation[0, 0])

    def as_row(self) -> np.ndarray:
        """
        Gets the transform as 12 values: row-major rotation then translation.
        """
        return np.concatenate((self._rotation.reshape(-1), self._translation))

    def apply(self, positions: np.ndarray) -> np.ndarray:
        """
        Transforms an (n, 3) array (or a single 3-vector) of positions.
        """
        positions = np.asarray(positions, dtype=np.float64)
        return positions @ self._rotation.T + self._translation

    def compose(self, other: "RigidTransform") -> "RigidTransform":
        """
        Gets the transform applying 'other' first, then this one.
        """
        return RigidTransform(self._rotation @ other._rotation,
                              self._rotation @ other._translation + self._translation)

    def inverse(self) -> "RigidTransform":
        return RigidTransform(self._rotation.T, -(self._rotation.T @ self._translation))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._rotation, np.eye(3)) and not np.any(self._translation))

    def __matmul__(self, other: "RigidTransform") -> "RigidTransform":
        return self.compose(other)

    def __eq__(self, other):
        return (isinstance(other, RigidTransform) and
                np.array_equal(self._rotation, other._rotation) and
                np.array_equal(self._translation, other._translation))

    def __repr__(self):
        return f"RigidTransform(rotation={self._rotation.tolist()}, translation={self._translation.tolist()})"
