import numpy as np

# Range rasters are stored in millimetres
RANGE_SCALE = 1000.0

# Grey level of Changed/occupied cells in 8-bit masks
MASK_ON = 255


def range_raster_to_pgm(ranges: np.ndarray, scale: float = RANGE_SCALE) -> np.ndarray:
    """
    Converts a range raster in metres into 16-bit grey levels,
    round(range * scale) clipped to 65535. Empty pixels (range 0) stay 0.

    :param ranges:  The (H, W) range raster.
    :param scale:   Grey levels per metre.
    :return:        The uint16 raster.
    """
    return np.clip(np.round(np.asarray(ranges, dtype=np.float64) * scale), 0, 65535).astype(np.uint16)


def mask_to_pgm(mask: np.ndarray) -> np.ndarray:
    """
    Converts a label raster or cost map into 8-bit grey levels: any
    non-zero cell becomes 255.

    :param mask:    The (H, W) raster.
    :return:        The uint8 raster.
    """
    return np.where(np.asarray(mask) > 0, MASK_ON, 0).astype(np.uint8)
