from ._BaselineTest import BaselineTest
from ._ChangeModelTest import ChangeModelTest
from ._CheckpointTest import CheckpointTest
from ._CliTest import CliTest
from ._CostMapTest import CostMapTest
from ._DatasetTest import DatasetTest
from ._EvalTest import EvalTest
from ._FileFormatsTest import FileFormatsTest
from ._LossesTest import LossesTest
from ._PointCloudTest import PointCloudTest
from ._PolylineTest import PolylineTest
from ._ProjectionTest import ProjectionTest
from ._RigidTransformTest import RigidTransformTest
from ._SaveLoadTest import SaveLoadTest
from ._SceneSpecTest import SceneSpecTest
from ._SerialisationTest import SerialisationTest
from ._SpatialIndexTest import SpatialIndexTest
from ._StudyTest import StudyTest
from ._TrainerTest import TrainerTest
