from typing import Tuple, Union, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .._EmptyMapError import EmptyMapError
from ._Point3 import Point3
from ._PointCloud import PointCloud

# Relative and absolute slack when deciding whether two candidates tie
TIE_RELATIVE_TOLERANCE = 1e-9
TIE_ABSOLUTE_TOLERANCE = 1e-12


class SpatialIndex:
    """
    Immutable k-d tree over the positions of a point cloud, answering
    exact nearest-neighbour queries. Distances are Euclidean and computed
    as sqrt(sum((p - q)^2)); ties are broken by lowest point index.
    Queries may be made concurrently from multiple threads.
    """
    def __init__(self, cloud: PointCloud):
        self._positions: np.ndarray = cloud.positions
        self._tree = cKDTree(self._positions) if len(cloud) > 0 else None

    def __len__(self) -> int:
        return len(self._positions)

    @property
    def positions(self) -> np.ndarray:
        return self._positions

    def nearest(self, query: Union[Point3, Sequence[float]]) -> Tuple[float, int]:
        """
        Gets the nearest indexed point to a single query.

        :param query:   The query position.
        :return:        The distance to, and the index of, the nearest point.
        """
        distances, indices = self.nearest_many(np.asarray(tuple(query), dtype=np.float64).reshape(1, 3))
        return float(distances[0]), int(indices[0])

    def nearest_many(self, queries: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Gets the nearest indexed point for each of an (m, 3) array of queries.

        :param queries:     The query positions.
        :return:            The (m,) distances and (m,) int64 indices.
        """
        if self._tree is None:
            raise EmptyMapError("Can't query an empty map")

        queries = np.asarray(queries, dtype=np.float64).reshape(-1, 3)
        if len(queries) == 0:
            return np.zeros(0), np.zeros(0, dtype=np.int64)

        # Ask for a second neighbour to detect possible ties
        k = min(2, len(self._positions))
        tree_distances, tree_indices = self._tree.query(queries, k=k)
        if k == 1:
            indices = np.asarray(tree_indices, dtype=np.int64).reshape(-1)
            possible_ties = np.zeros(0, dtype=np.int64)
        else:
            indices = tree_indices[:, 0].astype(np.int64)
            possible_ties = np.flatnonzero(
                tree_distances[:, 1] <= self._tie_radius(tree_distances[:, 0])
            )

        # Resolve ties exhaustively among all candidates in a slightly enlarged ball
        for query_index in possible_ties:
            query = queries[query_index]
            radius = self._tie_radius(tree_distances[query_index, 0])
            candidates = np.sort(np.asarray(self._tree.query_ball_point(query, radius), dtype=np.int64))
            candidate_distances = self._distances(self._positions[candidates], query)
            indices[query_index] = candidates[np.argmin(candidate_distances)]

        return self._distances(self._positions[indices], queries), indices

    @staticmethod
    def _tie_radius(distance):
        return distance * (1.0 + TIE_RELATIVE_TOLERANCE) + TIE_ABSOLUTE_TOLERANCE

    @staticmethod
    def _distances(points: np.ndarray, queries: np.ndarray) -> np.ndarray:
        difference = points - queries
        return np.sqrt(np.sum(difference * difference, axis=-1))
