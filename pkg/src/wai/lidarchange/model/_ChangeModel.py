import math
from typing import Dict, Tuple, Any

import torch
import torch.nn.functional as F
from torch import nn

from ._layers import CircularConv2d, DoubleConv, circular_upsample
from ._ModelConfig import ModelConfig, INPUT_CHANNELS

# Shrinks the initial classifier weights so every pixel starts near p = 0.5
CLASSIFIER_INIT_SCALE = 0.01


class ChangeModel(nn.Module):
    """
    Encoder-decoder with skip connections. Input is (batch, 2, H, W)
    normalised (live, map) ranges; output is (batch, 2, H, W) class scores,
    index 1 being Changed.

    Forward passes made through wai.lidarchange.model.forward keep their
    activations on a tape so that backward can be called later for the
    same pair of images.
    """
    def __init__(self, config: ModelConfig, seed: int = 0):
        super().__init__()

        self.config: ModelConfig = config
        self.seed: int = int(seed)

        channels = config.encoder_channels

        self.encoders = nn.ModuleList()
        in_channels = INPUT_CHANNELS
        for stage, out_channels in enumerate(channels):
            first_kernel = config.first_last_kernel if stage == 0 else config.interior_kernel
            self.encoders.append(DoubleConv(in_channels, out_channels, first_kernel, config.interior_kernel))
            in_channels = out_channels

        # Deepest first
        self.decoders = nn.ModuleList()
        for stage in reversed(range(len(channels) - 1)):
            self.decoders.append(DoubleConv(channels[stage + 1] + channels[stage], channels[stage],
                                            config.interior_kernel, config.interior_kernel))

        self.classifier = CircularConv2d(channels[0], config.num_classes, config.first_last_kernel)

        self.to(config.torch_dtype)
        self.reset_parameters(self.seed)

        # Retained forward passes, keyed by the ids of the (live, map) images
        self._tape: Dict[Tuple[int, int], Tuple[Any, Any, torch.Tensor]] = {}

    def reset_parameters(self, seed: int):
        """
        Re-initialises all weights uniformly in +-sqrt(6 / fan_in) from a
        generator seeded with 'seed'; biases start at zero. The classifier's
        bound is further scaled by CLASSIFIER_INIT_SCALE.
        """
        generator = torch.Generator().manual_seed(seed)

        with torch.no_grad():
            for module in self.modules():
                if isinstance(module, nn.Conv2d):
                    fan_in = module.in_channels * module.kernel_size[0] * module.kernel_size[1]
                    bound = math.sqrt(6.0 / fan_in)
                    if module is self.classifier:
                        bound *= CLASSIFIER_INIT_SCALE
                    module.weight.uniform_(-bound, bound, generator=generator)
                    module.bias.zero_()

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        skips = []
        for stage, encoder in enumerate(self.encoders):
            if stage > 0:
                x = F.max_pool2d(x, 2)
            x = encoder(x)
            skips.append(x)

        for decoder, skip in zip(self.decoders, reversed(skips[:-1])):
            x = decoder(torch.cat((circular_upsample(x), skip), dim=1))

        return self.classifier(x)

    def clear_tape(self):
        """
        Drops all retained forward passes.
        """
        self._tape.clear()

    def has_tape(self) -> bool:
        return len(self._tape) > 0
