# Distance ahead the local planner looks, in metres
PLANNING_HORIZON = 10.0


class CostMapConfig:
    """
    Geometry of the robot-centred cost grid: square cells of 'cell_size'
    metres covering +-'half_extent' metres around the robot, which must
    reach at least the planning horizon.
    """
    def __init__(self, cell_size: float = 0.1, half_extent: float = PLANNING_HORIZON):
        if not cell_size > 0.0:
            raise ValueError(f"Cell size must be positive, got {cell_size}")

        if half_extent < PLANNING_HORIZON:
            raise ValueError(f"The grid must cover the {PLANNING_HORIZON} m planning horizon, "
                             f"got a half-extent of {half_extent}")

        self.cell_size: float = float(cell_size)
        self.half_extent: float = float(half_extent)

    @property
    def cells(self) -> int:
        """
        Number of cells along each side.
        """
        return int(round(2.0 * self.half_extent / self.cell_size))

    @property
    def shape(self):
        return self.cells, self.cells

    def __eq__(self, other):
        return (isinstance(other, CostMapConfig) and self.cell_size == other.cell_size
                and self.half_extent == other.half_extent)

    def __repr__(self):
        return f"CostMapConfig(cell_size={self.cell_size}, half_extent={self.half_extent})"
