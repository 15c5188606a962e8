from typing import Tuple

import numpy as np

from ..file.csv import CSVFile
from ..file.pgm import mask_to_pgm
from ..geometry import RigidTransform
from ._CostMapConfig import CostMapConfig

# Columns of the occupied-cell export
OCCUPIED_CELLS_HEADER = ["row", "col", "x", "y"]


class CostMap:
    """
    A planar cost grid centred on the robot at 'origin' (a world pose;
    only its planar part is used). Row i, column j covers the cell whose
    centre is at local (x, y) = ((j + 0.5) c - e, (i + 0.5) c - e), with
    cell size c and half-extent e. Values lie in [0, 1].
    """
    def __init__(self, grid: np.ndarray, config: CostMapConfig, origin: RigidTransform = RigidTransform.identity()):
        grid = np.array(grid, dtype=np.float64)

        if grid.shape != config.shape:
            raise ValueError(f"Grid shape {grid.shape} doesn't match the configured {config.shape}")

        if np.any((grid < 0.0) | (grid > 1.0)) or not np.all(np.isfinite(grid)):
            raise ValueError("Cost values must lie in [0, 1]")

        self.grid: np.ndarray = grid
        self.config: CostMapConfig = config
        self.origin: RigidTransform = origin

    @classmethod
    def empty(cls, config: CostMapConfig = CostMapConfig(),
              origin: RigidTransform = RigidTransform.identity()) -> "CostMap":
        return CostMap(np.zeros(config.shape), config, origin)

    @property
    def occupied(self) -> np.ndarray:
        return self.grid > 0.0

    def cell_of(self, local_xy: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Gets the cells containing local planar positions.

        :param local_xy:    (n, 2) positions in the map's frame.
        :return:            Rows, columns and the mask of positions inside the grid.
        """
        local_xy = np.asarray(local_xy, dtype=np.float64).reshape(-1, 2)
        columns = np.floor((local_xy[:, 0] + self.config.half_extent) / self.config.cell_size).astype(np.int64)
        rows = np.floor((local_xy[:, 1] + self.config.half_extent) / self.config.cell_size).astype(np.int64)
        inside = (rows >= 0) & (rows < self.config.cells) & (columns >= 0) & (columns < self.config.cells)
        return rows, columns, inside

    def cell_centres(self, rows: np.ndarray, columns: np.ndarray) -> np.ndarray:
        """
        Gets the local (x, y) centres of cells.
        """
        size, extent = self.config.cell_size, self.config.half_extent
        return np.column_stack(((np.asarray(columns) + 0.5) * size - extent,
                                (np.asarray(rows) + 0.5) * size - extent))

    def local_to_world(self, local_xy: np.ndarray) -> np.ndarray:
        planar = self._planar_origin()
        local_xy = np.asarray(local_xy, dtype=np.float64).reshape(-1, 2)
        return planar.apply(np.column_stack((local_xy, np.zeros(len(local_xy)))))[:, :2]

    def world_to_local(self, world_xy: np.ndarray) -> np.ndarray:
        planar = self._planar_origin()
        world_xy = np.asarray(world_xy, dtype=np.float64).reshape(-1, 2)
        return planar.inverse().apply(np.column_stack((world_xy, np.zeros(len(world_xy)))))[:, :2]

    def _planar_origin(self) -> RigidTransform:
        translation = self.origin.translation
        return RigidTransform.from_yaw(self.origin.yaw, (translation[0], translation[1], 0.0))

    def occupied_cells_csv(self) -> CSVFile:
        """
        Lists the occupied cells with their world-frame centres.
        """
        rows, columns = np.nonzero(self.occupied)
        centres = self.local_to_world(self.cell_centres(rows, columns))
        return CSVFile(OCCUPIED_CELLS_HEADER,
                       [[int(row), int(column), float(x), float(y)]
                        for row, column, (x, y) in zip(rows, columns, centres)],
                       [int, int, float, float])

    def to_pgm(self) -> np.ndarray:
        """
        Gets the grid as an 8-bit image, occupied cells 255, with the
        top image row holding the largest local y.
        """
        return mask_to_pgm(self.grid[::-1])

    def __eq__(self, other):
        return (isinstance(other, CostMap) and self.config == other.config
                and np.array_equal(self.grid, other.grid) and self.origin == other.origin)

    def __repr__(self):
        return f"CostMap({self.config!r}, occupied={int(np.sum(self.occupied))} cells)"
