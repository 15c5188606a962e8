from typing import IO

import numpy as np

from .._FileWriter import FileWriter


class PgmFileWriter(FileWriter[bytes, np.ndarray, "PgmFileWriter"]):
    """
    Writer for binary PGM images. uint8 rasters are written with a maximum
    grey level of 255, uint16 rasters (big-endian samples) with 65535.
    """
    def _dump(self, obj: np.ndarray, file: IO[bytes]):
        if obj.ndim != 2:
            raise ValueError(f"PGM images must be 2-dimensional, got shape {obj.shape}")

        if obj.dtype == np.uint8:
            max_value, data = 255, obj.tobytes()
        elif obj.dtype == np.uint16:
            max_value, data = 65535, obj.astype(">u2").tobytes()
        else:
            raise TypeError(f"PGM images must be uint8 or uint16, got {obj.dtype}")

        height, width = obj.shape
        file.write(f"P5\n{width} {height}\n{max_value}\n".encode("ascii"))
        file.write(data)
