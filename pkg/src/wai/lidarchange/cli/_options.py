"""
Groups of command-line options shared by several sub-commands, and the
configuration objects built from them.
"""
from argparse import ArgumentParser, Namespace

from ..losses import LossWeights, DESK_SCALE_LAMBDA1, DESK_SCALE_LAMBDA2
from ..model import GRADIENT_MODES, NON_SATURATING_GRADIENT
from ..model import ModelConfig
from ..projection import ProjectionConfig
from ..trainer import OptimiserConfig, TrainerConfig


def add_projection_options(parser: ArgumentParser):
    group = parser.add_argument_group("range image")
    group.add_argument("--height", type=int, default=32, help="rows of the range image")
    group.add_argument("--width", type=int, default=256, help="columns of the range image")
    group.add_argument("--fov", type=float, default=25.0, help="vertical field of view, degrees")
    group.add_argument("--fov-down", type=float, default=12.5, help="part of the field of view below the horizon")
    group.add_argument("--max-range", type=float, default=10.0, help="maximum rendered range, metres")


def projection_from(namespace: Namespace) -> ProjectionConfig:
    return ProjectionConfig(namespace.height, namespace.width, namespace.fov, namespace.fov_down,
                            namespace.max_range)


def add_training_options(parser: ArgumentParser):
    add_projection_options(parser)

    group = parser.add_argument_group("training")
    group.add_argument("--lambda1", type=float, default=DESK_SCALE_LAMBDA1,
                       help="weight of the class-balance term (about the distance to the map, metres, above which "
                            "points turn Changed)")
    group.add_argument("--lambda2", type=float, default=DESK_SCALE_LAMBDA2, help="weight of the temporal term")
    group.add_argument("--chamfer-weight", type=float, default=1.0, help="weight of the chamfer term")
    group.add_argument("--lr", type=float, default=1e-3, help="Adam learning rate")
    group.add_argument("--epochs", type=int, default=50, help="maximum number of epochs")
    group.add_argument("--patience", type=int, default=10, help="epochs without improvement before stopping")
    group.add_argument("--steps", type=int, default=None, help="maximum number of optimiser steps")
    group.add_argument("--map-voxel", type=float, default=0.2, help="map voxel size, metres")
    group.add_argument("--live-voxel", type=float, default=0.05, help="live-scan voxel size, metres")
    group.add_argument("--pair-spacing", type=int, default=1, help="frames between the two frames of a batch")
    group.add_argument("--no-shuffle", action="store_true", help="visit batches in sequence order")
    group.add_argument("--threads", type=int, default=None, help="number of torch threads")
    group.add_argument("--gradient", choices=GRADIENT_MODES, default=NON_SATURATING_GRADIENT,
                       help="how gradients pass the softmax of the network output")
    group.add_argument("--seed", type=int, default=0, help="random seed")


def loss_weights_from(namespace: Namespace) -> LossWeights:
    return LossWeights(namespace.lambda1, namespace.lambda2, namespace.chamfer_weight)


def optimiser_config_from(namespace: Namespace) -> OptimiserConfig:
    return OptimiserConfig(namespace.lr)


def trainer_config_from(namespace: Namespace) -> TrainerConfig:
    return TrainerConfig(epochs=namespace.epochs,
                         patience=namespace.patience,
                         map_voxel=namespace.map_voxel,
                         live_voxel=namespace.live_voxel,
                         pair_spacing=namespace.pair_spacing,
                         shuffle=not namespace.no_shuffle,
                         threads=namespace.threads,
                         max_steps=namespace.steps,
                         projection=projection_from(namespace),
                         gradient=namespace.gradient)


def model_config_from(namespace: Namespace) -> ModelConfig:
    return ModelConfig(height=namespace.height, width=namespace.width, input_scale=namespace.max_range)


def add_corridor_options(parser: ArgumentParser):
    group = parser.add_argument_group("corridor")
    group.add_argument("--corridor-width", type=float, default=5.0, help="corridor width, metres")
    group.add_argument("--range", dest="range_limit", type=float, default=10.0, help="corridor range limit, metres")
