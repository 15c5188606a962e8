import re
from typing import Dict, List, Optional, Sequence, Tuple, Type, TypeVar

from ..geometry import Polyline
from ._Box import Box
from ._ChangeObject import ChangeObject
from ._Cylinder import Cylinder
from ._ReflectiveClutter import ReflectiveClutter
from ._SensorModel import SensorModel
from ._Shape import format_vector, parse_vector
from ._VegetationPatch import VegetationPatch

ElementType = TypeVar("ElementType")

# Key prefixes of the indexed scene elements
BOX_PREFIX = "box"
CYLINDER_PREFIX = "cylinder"
VEGETATION_PREFIX = "vegetation"
CHANGE_PREFIX = "change"
CLUTTER_PREFIX = "clutter"
SENSOR_PREFIX = "sensor"

# Change objects of the example scenes: beside the path, then close to mapped structures
EXAMPLE_CHANGES = [
    ChangeObject(Box((4.0, 1.0, 0.4), (0.6, 0.6, 0.8))),
    ChangeObject(Cylinder((8.0, -1.2), 0.25, 1.2)),
    ChangeObject(Box((12.5, 2.4, 0.5), (0.8, 0.5, 1.0), 0.5)),
    ChangeObject(Box((6.0, -1.5, 0.3), (1.0, 0.5, 0.6))),
]
NEAR_MAP_CHANGES = [
    ChangeObject(Box((6.5, 3.5, 0.4), (0.8, 0.5, 0.8))),
    ChangeObject(Cylinder((9.0, 2.0), 0.2, 1.0)),
]

# Reflective signs of the cluttered example scene
EXAMPLE_SIGNS = [
    Box((2.0, 2.0, 0.8), (1.2, 0.1, 1.6)),
    Box((3.6, -1.9, 0.8), (1.2, 0.1, 1.6)),
    Box((10.5, -1.6, 0.8), (1.2, 0.1, 1.6), 0.46),
]


class SceneSpec:
    """
    Description of a synthetic teach-and-repeat scene: a flat square of
    ground, static structures, vegetation clutter, reflective structures
    that produce ghost returns, the objects that appear only during the
    repeat pass, and the path the sensor drives.

    :param path:                    The taught path.
    :param ground_extent:           Half the side of the ground square, in metres.
    :param boxes:                   Static boxes.
    :param cylinders:               Static cylinders.
    :param vegetation:              Vegetation patches.
    :param changes:                 Repeat-only objects.
    :param clutter:                 Static reflective structures with ghost returns.
    :param speed:                   Driving speed in m/s.
    :param frame_spacing:           Path distance between stored frames, in metres.
    :param background_intensity:    Intensity range of ordinary returns.
    :param reflective_intensity:    Intensity range of returns from reflective objects.
    :param sensor:                  The simulated sensor.
    """
    def __init__(self,
                 path: Polyline,
                 ground_extent: float = 30.0,
                 boxes: Sequence[Box] = (),
                 cylinders: Sequence[Cylinder] = (),
                 vegetation: Sequence[VegetationPatch] = (),
                 changes: Sequence[ChangeObject] = (),
                 clutter: Sequence[ReflectiveClutter] = (),
                 speed: float = 1.0,
                 frame_spacing: float = 0.3,
                 background_intensity: Tuple[float, float] = (0.0, 0.4),
                 reflective_intensity: Tuple[float, float] = (0.9, 1.0),
                 sensor: SensorModel = SensorModel()):
        if not ground_extent > 0.0:
            raise ValueError(f"Ground extent must be positive, got {ground_extent}")

        if not speed > 0.0:
            raise ValueError(f"Speed must be positive, got {speed}")

        if not frame_spacing > 0.0:
            raise ValueError(f"Frame spacing must be positive, got {frame_spacing}")

        for name, (low, high) in (("background", background_intensity), ("reflective", reflective_intensity)):
            if not 0.0 <= low <= high <= 1.0:
                raise ValueError(f"The {name} intensity range must satisfy 0 <= low <= high <= 1, got {low}, {high}")

        self.path: Polyline = path
        self.ground_extent: float = float(ground_extent)
        self.boxes: List[Box] = list(boxes)
        self.cylinders: List[Cylinder] = list(cylinders)
        self.vegetation: List[VegetationPatch] = list(vegetation)
        self.changes: List[ChangeObject] = list(changes)
        self.clutter: List[ReflectiveClutter] = list(clutter)
        self.speed: float = float(speed)
        self.frame_spacing: float = float(frame_spacing)
        self.background_intensity: Tuple[float, float] = (float(background_intensity[0]),
                                                          float(background_intensity[1]))
        self.reflective_intensity: Tuple[float, float] = (float(reflective_intensity[0]),
                                                          float(reflective_intensity[1]))
        self.sensor: SensorModel = sensor

    @classmethod
    def example(cls, changes: int = 3, vegetation_jitter: float = 0.05, **kwargs) -> "SceneSpec":
        """
        A small built-in scene: a bending path between walls, posts and
        two vegetation patches, with up to four reflective change objects
        placed beside the path.

        :param changes:             How many change objects to include (0-4).
        :param vegetation_jitter:   Jitter of the vegetation clutter, in metres.
        :param kwargs:              Overrides of the other SceneSpec parameters.
        :return:                    The scene.
        """
        if not 0 <= changes <= len(EXAMPLE_CHANGES):
            raise ValueError(f"The example scene has 0 to {len(EXAMPLE_CHANGES)} change objects, got {changes}")

        return SceneSpec(
            path=Polyline(((0.0, 0.0), (10.0, 0.0), (16.0, 3.0))),
            boxes=(Box((5.0, 4.0, 1.0), (8.0, 0.3, 2.0)),
                   Box((5.0, -4.0, 1.0), (8.0, 0.3, 2.0)),
                   Box((14.0, -2.5, 0.75), (2.0, 2.0, 1.5), 0.4)),
            cylinders=(Cylinder((3.0, -2.5), 0.2, 3.0),
                       Cylinder((9.0, 2.5), 0.25, 2.5),
                       Cylinder((13.0, 5.0), 0.3, 2.0)),
            vegetation=(VegetationPatch((7.0, -2.8), (4.0, 1.2), density=3.0, jitter=vegetation_jitter),
                        VegetationPatch((12.0, 3.5), (2.0, 1.0), density=3.0, jitter=vegetation_jitter)),
            changes=EXAMPLE_CHANGES[:changes],
            **kwargs
        )

    @classmethod
    def cluttered_example(cls,
                          changes: int = 6,
                          vegetation_jitter: float = 0.2,
                          ghost_rate: float = 0.5,
                          **kwargs) -> "SceneSpec":
        """
        The example scene made hard for a distance threshold: vegetation
        jitters by about a typical threshold (with a third patch beside the
        start of the path), three reflective signs return ghosts in front
        of themselves, and the last two change objects stand within 10 cm
        of mapped structures.

        :param changes:             How many change objects to include (0-6).
        :param vegetation_jitter:   Jitter of the vegetation clutter, in metres.
        :param ghost_rate:          Ghost probability of the signs' returns.
        :param kwargs:              Overrides of the other SceneSpec parameters.
        :return:                    The scene.
        """
        candidates = EXAMPLE_CHANGES + NEAR_MAP_CHANGES
        if not 0 <= changes <= len(candidates):
            raise ValueError(f"The cluttered example scene has 0 to {len(candidates)} change objects, got {changes}")

        base = cls.example(0, vegetation_jitter)

        return SceneSpec(
            path=base.path,
            boxes=base.boxes,
            cylinders=base.cylinders,
            vegetation=base.vegetation + [VegetationPatch((1.5, -1.8), (2.0, 0.8), density=3.0,
                                                          jitter=vegetation_jitter)],
            changes=candidates[:changes],
            clutter=[ReflectiveClutter(sign, ghost_rate) for sign in EXAMPLE_SIGNS],
            **kwargs
        )

    def to_properties(self) -> Dict[str, str]:
        """
        Encodes the scene as Java-properties key/value pairs.
        """
        properties = {
            "ground.extent": repr(self.ground_extent),
            "path.waypoints": ";".join(format_vector(waypoint) for waypoint in self.path.waypoints),
            "path.speed": repr(self.speed),
            "path.frame_spacing": repr(self.frame_spacing),
            "intensity.background": format_vector(self.background_intensity),
            "intensity.reflective": format_vector(self.reflective_intensity),
        }

        for prefix, elements in ((BOX_PREFIX, self.boxes),
                                 (CYLINDER_PREFIX, self.cylinders),
                                 (VEGETATION_PREFIX, self.vegetation),
                                 (CHANGE_PREFIX, self.changes),
                                 (CLUTTER_PREFIX, self.clutter)):
            for index, element in enumerate(elements):
                properties.update(element.to_properties(f"{prefix}.{index}"))

        properties.update(self.sensor.to_properties(SENSOR_PREFIX))

        return properties

    @classmethod
    def from_properties(cls, properties: Dict[str, str]) -> "SceneSpec":
        """
        Decodes a scene written by to_properties. Keys other than the
        path's waypoints are optional and fall back to their defaults.
        """
        if "path.waypoints" not in properties:
            raise ValueError("Scene has no 'path.waypoints'")

        path = Polyline([parse_vector(waypoint, 2) for waypoint in properties["path.waypoints"].split(";")])

        def optional_float(key: str, default: float) -> float:
            return float(properties[key]) if key in properties else default

        def optional_range(key: str, default: Tuple[float, float]) -> Tuple[float, float]:
            return parse_vector(properties[key], 2) if key in properties else default

        return SceneSpec(
            path=path,
            ground_extent=optional_float("ground.extent", 30.0),
            boxes=indexed_elements(properties, BOX_PREFIX, Box),
            cylinders=indexed_elements(properties, CYLINDER_PREFIX, Cylinder),
            vegetation=indexed_elements(properties, VEGETATION_PREFIX, VegetationPatch),
            changes=indexed_elements(properties, CHANGE_PREFIX, ChangeObject),
            clutter=indexed_elements(properties, CLUTTER_PREFIX, ReflectiveClutter),
            speed=optional_float("path.speed", 1.0),
            frame_spacing=optional_float("path.frame_spacing", 0.3),
            background_intensity=optional_range("intensity.background", (0.0, 0.4)),
            reflective_intensity=optional_range("intensity.reflective", (0.9, 1.0)),
            sensor=SensorModel.from_properties(properties, SENSOR_PREFIX)
        )

    def __eq__(self, other):
        return isinstance(other, SceneSpec) and self.to_properties() == other.to_properties()


def indexed_elements(properties: Dict[str, str], prefix: str, element_type: Type[ElementType]) -> List[ElementType]:
    """
    Decodes the elements stored under '<prefix>.<index>.' keys, in index order.
    """
    pattern = re.compile(rf"^{re.escape(prefix)}\.(\d+)\.")
    indices = sorted({int(match.group(1)) for match in map(pattern.match, properties) if match is not None})
    return [element_type.from_properties(properties, f"{prefix}.{index}") for index in indices]
