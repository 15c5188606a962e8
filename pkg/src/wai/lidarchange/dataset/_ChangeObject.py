from typing import Dict, Union

from ._Box import Box
from ._Cylinder import Cylinder

# Property value naming each shape kind
SHAPE_KINDS = {"box": Box, "cylinder": Cylinder}


class ChangeObject:
    """
    An object present during the repeat pass but not while the map was
    taught. Reflective objects carry high-intensity returns, which is how
    their points are labelled automatically.
    """
    def __init__(self, shape: Union[Box, Cylinder], reflective: bool = True):
        if not isinstance(shape, (Box, Cylinder)):
            raise TypeError(f"Change objects are boxes or cylinders, got {type(shape)}")

        self.shape: Union[Box, Cylinder] = shape
        self.reflective: bool = bool(reflective)

    @property
    def kind(self) -> str:
        return "box" if isinstance(self.shape, Box) else "cylinder"

    def to_properties(self, prefix: str) -> Dict[str, str]:
        properties = self.shape.to_properties(prefix)
        properties[f"{prefix}.shape"] = self.kind
        properties[f"{prefix}.reflective"] = str(self.reflective).lower()
        return properties

    @classmethod
    def from_properties(cls, properties: Dict[str, str], prefix: str) -> "ChangeObject":
        kind = properties[f"{prefix}.shape"]
        if kind not in SHAPE_KINDS:
            raise ValueError(f"Unknown change-object shape '{kind}', expected one of {sorted(SHAPE_KINDS)}")

        reflective = properties.get(f"{prefix}.reflective", "true").lower()
        if reflective not in ("true", "false"):
            raise ValueError(f"'{prefix}.reflective' must be true or false, got '{reflective}'")

        return ChangeObject(SHAPE_KINDS[kind].from_properties(properties, prefix), reflective == "true")

    def __eq__(self, other):
        return isinstance(other, ChangeObject) and self.shape == other.shape and self.reflective == other.reflective

    def __repr__(self):
        return f"ChangeObject({self.shape!r}, reflective={self.reflective})"
