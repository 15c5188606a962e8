from typing import IO, List

import numpy as np

from .._FileReader import FileReader


class PgmFileReader(FileReader[bytes, np.ndarray, "PgmFileReader"]):
    """
    Reader for binary PGM images as written by PgmFileWriter.
    """
    def _load(self, file: IO[bytes]) -> np.ndarray:
        # Magic, width, height and max-value, skipping comments
        tokens: List[bytes] = []
        while len(tokens) < 4:
            line = file.readline()
            if line == b"":
                raise ValueError("PGM header ended early")
            tokens.extend(line.split(b"#", 1)[0].split())

        if tokens[0] != b"P5":
            raise ValueError(f"Not a binary PGM file (magic {tokens[0]!r})")

        width, height, max_value = (int(token) for token in tokens[1:4])
        dtype = np.dtype(np.uint8) if max_value < 256 else np.dtype(">u2")

        data = file.read(width * height * dtype.itemsize)
        if len(data) != width * height * dtype.itemsize:
            raise ValueError("PGM pixel data is truncated")

        return np.frombuffer(data, dtype=dtype).reshape(height, width).astype(
            np.uint8 if max_value < 256 else np.uint16
        )
