"""
Synthetic teach-and-repeat data: scene descriptions, a simulated LiDAR,
stored frames with ground truth, temporal pairing of frames and the
intensity-based labelling of reflective change objects.
"""
from ._Box import Box
from ._ChangeObject import ChangeObject
from ._Cylinder import Cylinder
from ._Frame import Frame
from ._functions import generate_sequence, reflective_label, pair_frames
from ._load import load_sequence
from ._map_view import crop_map, map_view_radius, MAP_VIEW_MARGIN
from ._ReflectiveClutter import ReflectiveClutter
from ._RepeatSequence import RepeatSequence
from ._save import save_sequence
from ._SceneSpec import SceneSpec
from ._SceneSpecFileReader import SceneSpecFileReader
from ._SceneSpecFileWriter import SceneSpecFileWriter
from ._SensorModel import SensorModel
from ._SequenceGenerator import SequenceGenerator
from ._Shape import Shape
from ._TemporalBatch import TemporalBatch
from ._VegetationPatch import VegetationPatch
from . import constants
