from ...geometry import PointCloud
from ._PlyFileWriter import PlyFileWriter


def save(cloud: PointCloud, filename: str):
    """
    Writes a point cloud to an ASCII PLY file.

    :param cloud:       The cloud to write.
    :param filename:    The file to write to.
    """
    PlyFileWriter().dumpf(filename, cloud)
