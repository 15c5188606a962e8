import logging
import sys
from argparse import ArgumentParser
from typing import Optional, Sequence

from .._InvalidStateError import InvalidStateError
from ..eval import DEFAULT_BASELINE_THRESHOLDS, STUDY_KINDS
from ..logging import create_standard_application_root_logger, root_logger
from . import _commands
from ._LoggingArgumentParser import LoggingArgumentParser
from ._options import add_corridor_options, add_projection_options, add_training_options

# Name of the console script
PROGRAM = "wai-lidarchange"


def create_parser() -> ArgumentParser:
    """
    Creates the parser for all sub-commands.
    """
    parser = LoggingArgumentParser(prog=PROGRAM,
                                   description="Unsupervised change detection for LiDAR scans against a prior map.")
    parser.add_argument("--verbose", action="store_true", help="log progress")
    parser.add_argument("--debug", action="store_true", help="log details of every step")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    generate = commands.add_parser("generate", help="generate a synthetic teach-and-repeat sequence")
    generate.add_argument("--spec", default=None, help="scene specification (.properties); default: built-in scene")
    generate.add_argument("--changes", type=int, default=3, help="change objects in the built-in scene")
    generate.add_argument("--jitter", type=float, default=0.05, help="vegetation jitter in the built-in scene, metres")
    generate.add_argument("--cluttered", action="store_true",
                          help="use the built-in scene with reflective clutter and changes near the map")
    generate.add_argument("--seed", type=int, default=0, help="random seed")
    generate.add_argument("--map-voxel", type=float, default=0.05, help="voxel size of the stored map, metres")
    generate.add_argument("--out", required=True, help="sequence directory to write")
    generate.set_defaults(handler=_commands.generate)

    render = commands.add_parser("render", help="write the range images and truth mask of a frame as PGM")
    render.add_argument("--seq", required=True, help="sequence directory")
    render.add_argument("--frame", type=int, default=0, help="frame index")
    render.add_argument("--out", required=True, help="output directory")
    add_projection_options(render)
    render.set_defaults(handler=_commands.render_frame)

    train = commands.add_parser("train", help="train a model without labels")
    train.add_argument("--seq", action="append", required=True, help="training sequence directory (repeatable)")
    train.add_argument("--out", required=True, help="checkpoint to write")
    train.add_argument("--log", default=None, help="CSV training log to write")
    add_training_options(train)
    train.set_defaults(handler=_commands.train_model)

    finetune = commands.add_parser("finetune", help="fine-tune a pre-trained model at a lower learning rate")
    finetune.add_argument("--checkpoint", required=True, help="pre-trained checkpoint")
    finetune.add_argument("--seq", action="append", required=True, help="sequence directory (repeatable)")
    finetune.add_argument("--out", required=True, help="checkpoint to write")
    finetune.add_argument("--log", default=None, help="CSV training log to write")
    finetune.add_argument("--lr-scale", type=float, default=0.1, help="factor applied to the learning rate")
    add_training_options(finetune)
    finetune.set_defaults(handler=_commands.finetune_model)

    infer = commands.add_parser("infer", help="label the frames of a sequence with a model")
    infer.add_argument("--model", required=True, help="checkpoint")
    infer.add_argument("--seq", required=True, help="sequence directory")
    infer.add_argument("--out", required=True, help="directory for the per-frame label CSVs")
    infer.add_argument("--threshold", type=float, default=0.5, help="Changed-probability threshold")
    infer.add_argument("--map-voxel", type=float, default=0.2, help="map voxel size, metres")
    infer.add_argument("--live-voxel", type=float, default=0.05, help="live-scan voxel size, metres")
    add_projection_options(infer)
    infer.set_defaults(handler=_commands.infer)

    baseline = commands.add_parser("baseline", help="label the frames of a sequence by nearest-neighbour distance")
    baseline.add_argument("--seq", required=True, help="sequence directory")
    baseline.add_argument("--out", required=True, help="directory for the per-frame label CSVs")
    baseline.add_argument("--threshold", type=float, default=0.3, help="distance threshold, metres")
    baseline.add_argument("--map-voxel", type=float, default=None, help="map voxel size, metres")
    baseline.set_defaults(handler=_commands.baseline)

    evaluate = commands.add_parser("eval", help="score a model (or the tuned baseline) against ground truth")
    evaluate.add_argument("--model", default=None, help="checkpoint; without it the baseline is evaluated")
    evaluate.add_argument("--seq", action="append", required=True, help="sequence directory (repeatable)")
    evaluate.add_argument("--out", default=None, help="CSV report to write")
    evaluate.add_argument("--threshold", type=float, default=0.5, help="Changed-probability threshold")
    evaluate.add_argument("--map-voxel", type=float, default=0.2, help="map voxel size, metres")
    evaluate.add_argument("--live-voxel", type=float, default=0.05, help="live-scan voxel size, metres")
    evaluate.add_argument("--baseline-thresholds", type=float, nargs="+", default=list(DEFAULT_BASELINE_THRESHOLDS),
                          help="distance thresholds swept for the baseline, metres")
    add_corridor_options(evaluate)
    add_projection_options(evaluate)
    evaluate.set_defaults(handler=_commands.evaluate)

    study = commands.add_parser("study", help="run a voxel sweep, loss ablation, method comparison or fine-tuning curve")
    study.add_argument("--kind", choices=STUDY_KINDS, required=True, help="the study to run")
    study.add_argument("--train-seq", action="append", default=[], help="training sequence directory (repeatable)")
    study.add_argument("--test-seq", action="append", required=True, help="test sequence directory (repeatable)")
    study.add_argument("--model", default=None, help="trained checkpoint for the method comparison")
    study.add_argument("--benchmark-frames", type=int, default=0, help="timed frames per compared method")
    study.add_argument("--curve-steps", type=int, default=100, help="steps of each fine-tuning curve run")
    study.add_argument("--curve-interval", type=int, default=10, help="steps between fine-tuning curve evaluations")
    study.add_argument("--target-iou", type=float, default=0.5, help="IoU_ch the fine-tuning curve counts steps to")
    study.add_argument("--curve-seeds", type=int, nargs="+", default=[0, 1, 2], help="seeds of the fine-tuning curve")
    study.add_argument("--lr-scale", type=float, default=0.1, help="learning-rate factor when fine-tuning")
    study.add_argument("--out", required=True, help="directory for the CSV tables")
    add_corridor_options(study)
    add_training_options(study)
    study.set_defaults(handler=_commands.study)

    benchmark = commands.add_parser("benchmark", help="time end-to-end inference")
    benchmark.add_argument("--model", default=None, help="checkpoint; without it the baseline is timed")
    benchmark.add_argument("--seq", required=True, help="sequence directory")
    benchmark.add_argument("--frames", type=int, default=100, help="number of timed frames")
    benchmark.add_argument("--threshold", type=float, default=0.3, help="baseline distance threshold, metres")
    benchmark.add_argument("--map-voxel", type=float, default=0.2, help="map voxel size, metres")
    benchmark.add_argument("--live-voxel", type=float, default=0.05, help="live-scan voxel size, metres")
    add_projection_options(benchmark)
    benchmark.set_defaults(handler=_commands.benchmark)

    costmap = commands.add_parser("costmap", help="turn per-frame labels into merged, inflated cost maps")
    costmap.add_argument("--seq", required=True, help="sequence directory")
    costmap.add_argument("--labels", required=True, help="directory of per-frame label CSVs (from infer/baseline)")
    costmap.add_argument("--out", required=True, help="directory for the cost-map PGMs and CSVs")
    costmap.add_argument("--robot-radius", type=float, default=0.5, help="robot radius, metres")
    costmap.add_argument("--cell", type=float, default=0.1, help="cell size, metres")
    costmap.add_argument("--half-extent", type=float, default=10.0, help="half the side of the grid, metres")
    costmap.add_argument("--queue-depth", type=int, default=5, help="number of recent maps merged")
    costmap.set_defaults(handler=_commands.costmap)

    return parser


def main(args: Optional[Sequence[str]] = None) -> int:
    """
    Runs the command-line tool.

    :param args:    The arguments, or None for sys.argv.
    :return:        The exit status.
    """
    create_standard_application_root_logger()
    namespace = create_parser().parse_args(args)

    if namespace.debug:
        logging.getLogger().setLevel(logging.DEBUG)
    elif namespace.verbose:
        logging.getLogger().setLevel(logging.INFO)

    try:
        namespace.handler(namespace)
    except (ValueError, InvalidStateError, OSError) as e:
        root_logger().getChild("cli").error(f"{namespace.command} failed: {e}")
        return 1

    return 0


def sys_main():
    """
    Entry point of the console script.
    """
    sys.exit(main())
