import numpy as np

from ._PgmFileReader import PgmFileReader
from ._PgmFileWriter import PgmFileWriter


def save(raster: np.ndarray, filename: str):
    """
    Writes a uint8/uint16 raster to a PGM file.

    :param raster:      The raster.
    :param filename:    The file to write to.
    """
    PgmFileWriter().dumpf(filename, raster)


def loadf(filename: str) -> np.ndarray:
    """
    Reads a raster from a PGM file.

    :param filename:    The file to read.
    :return:            The uint8/uint16 raster.
    """
    return PgmFileReader().read(filename)
