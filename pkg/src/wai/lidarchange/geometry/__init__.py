"""
Point-cloud primitives, rigid transforms, voxel downsampling and exact
nearest-neighbour queries.
"""
from ._functions import transform, voxel_downsample, voxel_assign, nearest
from ._Point3 import Point3
from ._PointCloud import PointCloud, SENSOR_FRAME, WORLD_FRAME
from ._Polyline import Polyline
from ._RigidTransform import RigidTransform
from ._SpatialIndex import SpatialIndex
