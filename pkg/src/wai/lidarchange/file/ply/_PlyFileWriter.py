from typing import IO

import numpy as np

from ...geometry import PointCloud
from .._FileWriter import FileWriter
from . import constants


class PlyFileWriter(FileWriter[str, PointCloud, "PlyFileWriter"]):
    """
    Writer for ASCII PLY files. Coordinates are written as doubles with
    enough digits to read back bit-identically.
    """
    def _dump(self, obj: PointCloud, file: IO[str]):
        header = [
            constants.MAGIC,
            constants.FORMAT_ASCII,
            f"{constants.COMMENT_KEYWORD} {constants.FRAME_ID_COMMENT} {obj.frame_id}",
            f"{constants.ELEMENT_KEYWORD} {constants.VERTEX_ELEMENT} {len(obj)}",
            f"{constants.PROPERTY_KEYWORD} double {constants.X}",
            f"{constants.PROPERTY_KEYWORD} double {constants.Y}",
            f"{constants.PROPERTY_KEYWORD} double {constants.Z}",
        ]
        if obj.has_intensity:
            header.append(f"{constants.PROPERTY_KEYWORD} double {constants.INTENSITY}")
        header.append(constants.END_HEADER)

        file.write("\n".join(header) + "\n")

        columns = obj.positions if not obj.has_intensity else np.column_stack((obj.positions, obj.intensity))
        if len(columns) > 0:
            np.savetxt(file, columns, fmt="%.17g")
