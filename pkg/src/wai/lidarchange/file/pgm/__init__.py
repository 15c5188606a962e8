"""
Package for binary (P5) PGM rasters, used to inspect range images,
label masks and cost maps.
"""
from ._conversion import range_raster_to_pgm, mask_to_pgm, RANGE_SCALE, MASK_ON
from ._PgmFileReader import PgmFileReader
from ._PgmFileWriter import PgmFileWriter
from ._save import save, loadf
