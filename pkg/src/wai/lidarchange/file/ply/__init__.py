"""
Package for ASCII PLY point-cloud files. Only the 'vertex' element is
used: properties x, y, z and an optional intensity. Other elements and
properties are skipped on read.
"""
from ._error import PlyFormatError
from ._load import loadf, loads
from ._PlyFileReader import PlyFileReader
from ._PlyFileWriter import PlyFileWriter
from ._save import save
from . import constants
