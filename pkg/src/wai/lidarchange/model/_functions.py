from typing import Dict, Union

import numpy as np
import torch

from .._InvalidStateError import InvalidStateError
from .._Label import LABEL_DTYPE
from ..projection import RangeImage
from ._ChangeModel import ChangeModel
from ._PixelLogits import PixelLogits

# How backward turns a gradient with respect to p_changed into one with respect to the logits
EXACT_GRADIENT = "exact"
NON_SATURATING_GRADIENT = "non_saturating"
GRADIENT_MODES = (EXACT_GRADIENT, NON_SATURATING_GRADIENT)


def forward(model: ChangeModel, live: RangeImage, map: RangeImage, retain_tape: bool = True) -> PixelLogits:
    """
    Runs the network on a pair of range images.

    When gradients are enabled and 'retain_tape' is set, the pass is kept
    so that backward can later be called with the same two images.

    :param model:           The model.
    :param live:            Range image of the live scan.
    :param map:             Range image of the map, from the same viewpoint.
    :param retain_tape:     Whether to keep the pass for backward.
    :return:                The per-pixel class scores.
    """
    if live.shape != map.shape:
        raise ValueError(f"Live image {live.shape} and map image {map.shape} differ in shape")

    if live.shape != model.config.shape:
        raise ValueError(f"Images are {live.shape} but the model expects {model.config.shape}")

    # Empty pixels are already 0
    stacked = np.stack((live.ranges, map.ranges)) / model.config.input_scale
    inputs = torch.as_tensor(stacked[None], dtype=model.config.torch_dtype)

    logits = model(inputs)[0]

    if retain_tape and torch.is_grad_enabled():
        model._tape[(id(live), id(map))] = (live, map, logits)

    return PixelLogits(logits.detach().permute(1, 2, 0).cpu().numpy())


def backward(model: ChangeModel,
             live: RangeImage,
             map: RangeImage,
             grad_p_changed: np.ndarray,
             mode: str = EXACT_GRADIENT) -> Dict[str, torch.Tensor]:
    """
    Back-propagates a gradient with respect to the Changed probability
    raster of a retained forward pass. The parameter gradients are
    returned and also accumulated into each parameter's .grad.

    In 'exact' mode the softmax is differentiated as is, so a pixel's
    logits receive g * p * (1 - p). In 'non_saturating' mode they receive
    g * p where g pushes towards Consistent and g * (1 - p) where it pushes
    towards Changed: the gradient of |g| times the log-likelihood of the
    class g favours. Both modes share their sign and their fixed points,
    but a pixel stuck at the wrong extreme keeps a gradient in the second.

    :param model:           The model.
    :param live:            The live image given to forward.
    :param map:             The map image given to forward.
    :param grad_p_changed:  (H, W) gradient of the loss with respect to p_changed.
    :param mode:            One of GRADIENT_MODES.
    :return:                The gradient of every parameter, by name.
    """
    if mode not in GRADIENT_MODES:
        raise ValueError(f"Unknown gradient mode '{mode}', expected one of {', '.join(GRADIENT_MODES)}")

    entry = model._tape.pop((id(live), id(map)), None)
    if entry is None or entry[0] is not live or entry[1] is not map:
        raise InvalidStateError("backward called without a retained forward pass for these images")

    _, _, logits = entry

    grad = torch.as_tensor(np.asarray(grad_p_changed, dtype=np.float64), dtype=logits.dtype)
    if grad.shape != logits.shape[1:]:
        raise ValueError(f"Gradient shape {tuple(grad.shape)} doesn't match the image {tuple(logits.shape[1:])}")

    with torch.no_grad():
        p_changed = torch.softmax(logits, dim=0)[1]
        if mode == EXACT_GRADIENT:
            grad_margin = grad * p_changed * (1.0 - p_changed)
        else:
            grad_margin = grad * torch.where(grad > 0.0, p_changed, 1.0 - p_changed)

    named_parameters = list(model.named_parameters())
    gradients = torch.autograd.grad(logits,
                                    [parameter for _, parameter in named_parameters],
                                    grad_outputs=torch.stack((-grad_margin, grad_margin)),
                                    allow_unused=True)

    result = {}
    for (name, parameter), gradient in zip(named_parameters, gradients):
        if gradient is None:
            gradient = torch.zeros_like(parameter)
        parameter.grad = gradient.clone() if parameter.grad is None else parameter.grad + gradient
        result[name] = gradient

    return result


def discard_tape(model: ChangeModel, live: RangeImage, map: RangeImage) -> bool:
    """
    Drops the retained forward pass of a pair of images, if any.

    :return:    Whether a pass was dropped.
    """
    return model._tape.pop((id(live), id(map)), None) is not None


def predict_labels(logits: Union[PixelLogits, np.ndarray], threshold: float = 0.5) -> np.ndarray:
    """
    Labels pixels Changed where the Changed probability exceeds the
    threshold; ties go to Consistent.

    :param logits:      The class scores (or an (H, W) probability raster).
    :param threshold:   The decision threshold.
    :return:            The (H, W) label raster.
    """
    p_changed = logits.p_changed if isinstance(logits, PixelLogits) else np.asarray(logits)
    return (p_changed > threshold).astype(LABEL_DTYPE)


def parameter_count(model: ChangeModel) -> int:
    """
    Gets the total number of scalar parameters of a model.
    """
    return sum(parameter.numel() for parameter in model.parameters())
