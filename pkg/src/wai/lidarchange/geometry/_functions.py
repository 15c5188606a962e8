from typing import Tuple, Optional, Union, Sequence

import numpy as np

from ._Point3 import Point3
from ._PointCloud import PointCloud
from ._RigidTransform import RigidTransform
from ._SpatialIndex import SpatialIndex


def transform(cloud: PointCloud, T: RigidTransform, frame_id: Optional[str] = None) -> PointCloud:
    """
    Applies a rigid transform to every point, preserving order and intensity.

    :param cloud:       The cloud to transform.
    :param T:           The transform.
    :param frame_id:    The frame tag of the result, or None to keep the cloud's.
    :return:            The transformed cloud.
    """
    frame_id = cloud.frame_id if frame_id is None else frame_id

    # The identity is exact
    if T.is_identity():
        return cloud.with_positions(cloud.positions.copy(), frame_id)

    return cloud.with_positions(T.apply(cloud.positions), frame_id)


def voxel_assign(cloud: PointCloud, voxel: float) -> Tuple[PointCloud, np.ndarray]:
    """
    Downsamples a cloud to one point per occupied voxel and reports which
    output point each input point was merged into.

    The voxel of a point is floor(p / voxel) per axis. The output point is the
    centroid of the voxel's members (intensity: their mean), and output points
    are ordered by the first appearance of their voxel in the input.

    :param cloud:   The cloud to downsample.
    :param voxel:   The voxel edge length in metres.
    :return:        The downsampled cloud, and an (n,) int64 array giving the
                    output index of each input point.
    """
    if not voxel > 0:
        raise ValueError(f"Voxel size must be positive, got {voxel}")

    if len(cloud) == 0:
        return cloud.subset(np.zeros(0, dtype=np.int64)), np.zeros(0, dtype=np.int64)

    keys = np.floor(cloud.positions / voxel).astype(np.int64)
    _, first_index, inverse = np.unique(keys, axis=0, return_index=True, return_inverse=True)
    inverse = inverse.reshape(-1)

    # Re-number voxels by first appearance
    order = np.argsort(first_index, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    membership = rank[inverse].astype(np.int64)

    num_voxels = len(order)
    counts = np.bincount(membership, minlength=num_voxels).astype(np.float64)
    centroids = np.stack(
        [np.bincount(membership, weights=cloud.positions[:, axis], minlength=num_voxels) for axis in range(3)],
        axis=1
    ) / counts[:, None]

    intensity = None
    if cloud.has_intensity:
        intensity = np.bincount(membership, weights=cloud.intensity, minlength=num_voxels) / counts
        intensity = np.clip(intensity, 0.0, 1.0)

    return PointCloud(centroids, intensity, cloud.frame_id), membership


def voxel_downsample(cloud: PointCloud, voxel: float) -> PointCloud:
    """
    Downsamples a cloud to the centroids of its occupied voxels.
    See voxel_assign for details.

    :param cloud:   The cloud to downsample.
    :param voxel:   The voxel edge length in metres.
    :return:        The downsampled cloud.
    """
    return voxel_assign(cloud, voxel)[0]


def nearest(index: SpatialIndex, q: Union[Point3, Sequence[float]]) -> Tuple[float, int]:
    """
    Exact nearest-neighbour query.

    :param index:   The index to query.
    :param q:       The query point.
    :return:        The distance to, and index of, the nearest indexed point
                    (lowest index on ties).
    """
    return index.nearest(q)
