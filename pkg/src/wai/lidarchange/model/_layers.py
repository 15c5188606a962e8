"""
Convolution building blocks that wrap around in azimuth: padding is
circular along the width and zero along the height.
"""
from typing import Tuple

import torch
import torch.nn.functional as F
from torch import nn


class CircularConv2d(nn.Conv2d):
    """
    Stride-1 convolution whose output has the input's size. Even kernel
    widths pad one more column on the right.
    """
    def __init__(self, in_channels: int, out_channels: int, kernel_size: Tuple[int, int]):
        super().__init__(in_channels, out_channels, kernel_size, padding=0, bias=True)

        kernel_height, kernel_width = kernel_size
        left = (kernel_width - 1) // 2
        top = (kernel_height - 1) // 2
        self._horizontal_padding = (left, kernel_width - 1 - left, 0, 0)
        self._vertical_padding = (0, 0, top, kernel_height - 1 - top)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        if any(self._horizontal_padding):
            x = F.pad(x, self._horizontal_padding, mode="circular")
        if any(self._vertical_padding):
            x = F.pad(x, self._vertical_padding, mode="constant", value=0.0)
        return F.conv2d(x, self.weight, self.bias)


class DoubleConv(nn.Module):
    """
    Two convolutions, each followed by a rectified-linear activation.
    """
    def __init__(self,
                 in_channels: int,
                 out_channels: int,
                 first_kernel: Tuple[int, int],
                 second_kernel: Tuple[int, int]):
        super().__init__()

        self.first = CircularConv2d(in_channels, out_channels, first_kernel)
        self.second = CircularConv2d(out_channels, out_channels, second_kernel)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        return F.relu(self.second(F.relu(self.first(x))))


def circular_upsample(x: torch.Tensor) -> torch.Tensor:
    """
    Doubles height and width with bilinear interpolation, interpolating
    across the azimuth seam.
    """
    x = F.pad(x, (1, 1, 0, 0), mode="circular")
    x = F.interpolate(x, scale_factor=2, mode="bilinear", align_corners=False)
    return x[..., 2:-2]
