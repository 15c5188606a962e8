from enum import IntEnum

import numpy as np

# The array type used for per-point and per-pixel labels
LABEL_DTYPE = np.uint8


class Label(IntEnum):
    """
    The two classes a live point can be assigned.
    """
    CONSISTENT = 0
    CHANGED = 1
