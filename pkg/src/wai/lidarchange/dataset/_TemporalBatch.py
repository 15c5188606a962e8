from ._Frame import Frame


class TemporalBatch:
    """
    Two frames of the same sequence, 'spacing' stored frames apart,
    used together by the temporal-consistency term.
    """
    def __init__(self, first: Frame, second: Frame, spacing: int = 1):
        if spacing <= 0:
            raise ValueError(f"Spacing must be positive, got {spacing}")

        self.first: Frame = first
        self.second: Frame = second
        self.spacing: int = int(spacing)

    @property
    def odometer_spacing(self) -> float:
        """
        The distance driven between the two frames, in metres.
        """
        return self.second.odometer - self.first.odometer

    def __iter__(self):
        return iter((self.first, self.second))

    def __repr__(self):
        return f"TemporalBatch({self.first.index} -> {self.second.index}, spacing={self.spacing})"
