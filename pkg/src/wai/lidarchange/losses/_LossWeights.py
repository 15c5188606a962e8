from typing import Dict

# Class-balance and temporal weights for small scenes
DESK_SCALE_LAMBDA1 = 0.3
DESK_SCALE_LAMBDA2 = 1.0


class LossWeights:
    """
    Weights of the terms of the total loss:

        total = chamfer_weight * L_chamfer + lambda1 * L_class + lambda2 * L_temporal

    The chamfer weight is 1 in normal training; setting it to 0 gives
    the class-only configuration of the loss ablation.

    The defaults are the outdoor-scale weights. A point settles on Changed
    once its distance to the map exceeds lambda1 (plus twice lambda2 times
    its distance to the other scan), so lambda1 is a distance in metres:
    scenes a few metres across with decimetre changes need the much smaller
    weights of desk_scale().
    """
    def __init__(self, lambda1: float = 15.0, lambda2: float = 1.0, chamfer: float = 1.0):
        for name, value in (("lambda1", lambda1), ("lambda2", lambda2), ("chamfer", chamfer)):
            if not value >= 0.0:
                raise ValueError(f"Loss weight '{name}' must be non-negative, got {value}")

        self.lambda1: float = float(lambda1)
        self.lambda2: float = float(lambda2)
        self.chamfer: float = float(chamfer)

    @classmethod
    def desk_scale(cls) -> "LossWeights":
        """
        Weights for small scenes, where changes are decimetres from the map
        and consistent surfaces a few centimetres.
        """
        return cls(DESK_SCALE_LAMBDA1, DESK_SCALE_LAMBDA2)

    def to_dict(self) -> Dict[str, str]:
        return {"lambda1": repr(self.lambda1), "lambda2": repr(self.lambda2), "chamfer": repr(self.chamfer)}

    def __eq__(self, other):
        return isinstance(other, LossWeights) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"LossWeights(lambda1={self.lambda1}, lambda2={self.lambda2}, chamfer={self.chamfer})"
