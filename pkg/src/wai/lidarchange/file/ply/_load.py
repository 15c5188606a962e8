from ...geometry import PointCloud
from ._PlyFileReader import PlyFileReader


def loadf(filename: str) -> PointCloud:
    """
    Reads a point cloud from a PLY file.

    :param filename:    The file to read.
    :return:            The point cloud.
    """
    return PlyFileReader().read(filename)


def loads(string: str) -> PointCloud:
    """
    Reads a point cloud from PLY text.

    :param string:  The PLY text.
    :return:        The point cloud.
    """
    return next(PlyFileReader().loads(string))
