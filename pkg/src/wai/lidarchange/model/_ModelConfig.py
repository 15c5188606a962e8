from typing import Tuple, Sequence, Dict

import torch

# Channels of the network input: normalised live and map ranges
INPUT_CHANNELS = 2

# Supported parameter precisions
DTYPES = {"float32": torch.float32, "float64": torch.float64}


class ModelConfig:
    """
    Architecture of the change-detection network.

    The encoder has one double convolution per entry of 'encoder_channels',
    with 2x2 max-pooling between stages; so height and width must be
    divisible by 2^(stages - 1). The first convolution and the final
    classifier use 'first_last_kernel', all others 'interior_kernel'.
    Input ranges are divided by 'input_scale' (the projection's maximum range).
    """
    def __init__(self,
                 height: int = 32,
                 width: int = 256,
                 encoder_channels: Sequence[int] = (16, 32, 64, 128),
                 first_last_kernel: Tuple[int, int] = (1, 2),
                 interior_kernel: Tuple[int, int] = (3, 3),
                 num_classes: int = 2,
                 input_scale: float = 10.0,
                 dtype: str = "float32"):
        encoder_channels = tuple(int(channels) for channels in encoder_channels)

        if len(encoder_channels) != 4:
            raise ValueError(f"The encoder has four stages, got {len(encoder_channels)} channel widths")

        if any(channels < 1 for channels in encoder_channels):
            raise ValueError(f"Channel widths must be positive, got {encoder_channels}")

        divisor = 2 ** (len(encoder_channels) - 1)
        if height < 1 or width < 1 or height % divisor != 0 or width % divisor != 0:
            raise ValueError(f"Height and width must be positive multiples of {divisor}, got {height}x{width}")

        for name, kernel in (("first_last_kernel", first_last_kernel), ("interior_kernel", interior_kernel)):
            if len(kernel) != 2 or any(size < 1 for size in kernel):
                raise ValueError(f"{name} must be two positive sizes, got {kernel}")

        if num_classes != 2:
            raise ValueError(f"The network separates exactly two classes, got {num_classes}")

        if not input_scale > 0.0:
            raise ValueError(f"Input scale must be positive, got {input_scale}")

        if dtype not in DTYPES:
            raise ValueError(f"dtype must be one of {sorted(DTYPES)}, got '{dtype}'")

        self.height: int = int(height)
        self.width: int = int(width)
        self.encoder_channels: Tuple[int, ...] = encoder_channels
        self.first_last_kernel: Tuple[int, int] = tuple(int(size) for size in first_last_kernel)
        self.interior_kernel: Tuple[int, int] = tuple(int(size) for size in interior_kernel)
        self.num_classes: int = int(num_classes)
        self.input_scale: float = float(input_scale)
        self.dtype: str = dtype

    @property
    def torch_dtype(self) -> torch.dtype:
        return DTYPES[self.dtype]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.height, self.width

    def to_dict(self) -> Dict[str, str]:
        return {
            "height": str(self.height),
            "width": str(self.width),
            "encoder_channels": ",".join(map(str, self.encoder_channels)),
            "first_last_kernel": ",".join(map(str, self.first_last_kernel)),
            "interior_kernel": ",".join(map(str, self.interior_kernel)),
            "num_classes": str(self.num_classes),
            "input_scale": repr(self.input_scale),
            "dtype": self.dtype,
        }

    @classmethod
    def from_dict(cls, values: Dict[str, str]) -> "ModelConfig":
        def sizes(key: str) -> Tuple[int, ...]:
            return tuple(int(size) for size in values[key].split(","))

        return ModelConfig(
            height=int(values["height"]),
            width=int(values["width"]),
            encoder_channels=sizes("encoder_channels"),
            first_last_kernel=sizes("first_last_kernel"),
            interior_kernel=sizes("interior_kernel"),
            num_classes=int(values["num_classes"]),
            input_scale=float(values["input_scale"]),
            dtype=values["dtype"]
        )

    def __eq__(self, other):
        return isinstance(other, ModelConfig) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"ModelConfig({', '.join(f'{key}={value}' for key, value in self.to_dict().items())})"
