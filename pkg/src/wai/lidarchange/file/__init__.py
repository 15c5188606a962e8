"""
Reading and writing of the on-disk formats: ASCII PLY point clouds,
PGM rasters and CSV tables.
"""
from ._FileIOBase import FileIOBase
from ._FileReader import FileReader
from ._FileWriter import FileWriter
from ._functions import ensure_directory
