"""
The sub-commands of the command-line tool. Each takes the parsed
namespace and does its work, raising on failure.
"""
import os
from argparse import Namespace

import numpy as np

from ..baseline import BaselineConfig
from ..costmap import CostMapConfig, CostMapQueue, inflate
from ..dataset import (
    Frame,
    RepeatSequence,
    SceneSpec,
    SceneSpecFileReader,
    generate_sequence,
    load_sequence,
    save_sequence,
    constants
)
from ..eval import (
    BaselinePredictor,
    EvalReport,
    ModelPredictor,
    Predictor,
    StudyConfig,
    benchmark_inference,
    best_baseline_threshold,
    evaluate_sequence,
    run_study
)
from ..file import csv, pgm
from ..file.csv import CSVFile
from ..logging import root_logger
from ..model import load_checkpoint, save_checkpoint
from ..projection import render
from ..trainer import finetune, train
from ._options import (
    loss_weights_from,
    model_config_from,
    optimiser_config_from,
    projection_from,
    trainer_config_from
)

_logger = root_logger().getChild("cli")


def generate(namespace: Namespace):
    if namespace.spec is not None:
        spec = SceneSpecFileReader().read(namespace.spec)
    elif namespace.cluttered:
        spec = SceneSpec.cluttered_example(namespace.changes, namespace.jitter)
    else:
        spec = SceneSpec.example(namespace.changes, namespace.jitter)

    sequence = generate_sequence(spec, namespace.seed, namespace.map_voxel)
    save_sequence(sequence, namespace.out)
    _logger.info(f"Wrote {sequence} to '{namespace.out}'")


def render_frame(namespace: Namespace):
    sequence = load_sequence(namespace.seq)
    frame = _frame(sequence, namespace.frame)
    projection = projection_from(namespace)

    live_image = render(frame.live, projection)
    map_image = render(frame.map_view, projection)

    truth_raster = np.zeros(projection.shape, dtype=np.uint8)
    populated = live_image.index_map >= 0
    truth_raster[populated] = frame.truth[live_image.index_map[populated]]

    name = constants.FRAME_NAME_FORMAT.format(frame.index)
    pgm.save(pgm.range_raster_to_pgm(live_image.ranges), os.path.join(namespace.out, f"{name}_live.pgm"))
    pgm.save(pgm.range_raster_to_pgm(map_image.ranges), os.path.join(namespace.out, f"{name}_map.pgm"))
    pgm.save(pgm.mask_to_pgm(truth_raster), os.path.join(namespace.out, f"{name}_truth.pgm"))


def train_model(namespace: Namespace):
    sequences = [load_sequence(directory) for directory in namespace.seq]
    model, log = train(sequences,
                       model_config_from(namespace),
                       loss_weights_from(namespace),
                       optimiser_config_from(namespace),
                       trainer_config_from(namespace),
                       namespace.seed)
    _save_training_output(model, log, namespace)


def finetune_model(namespace: Namespace):
    sequences = [load_sequence(directory) for directory in namespace.seq]
    model, log = finetune(namespace.checkpoint,
                          sequences,
                          namespace.lr_scale,
                          loss_weights_from(namespace),
                          optimiser_config_from(namespace),
                          trainer_config_from(namespace),
                          namespace.seed,
                          model_config_from(namespace))
    _save_training_output(model, log, namespace)


def infer(namespace: Namespace):
    model = load_checkpoint(namespace.model)
    predictor = ModelPredictor(model, projection_from(namespace), namespace.map_voxel, namespace.live_voxel,
                               namespace.threshold)
    _write_labels(predictor, load_sequence(namespace.seq), namespace.out)


def baseline(namespace: Namespace):
    predictor = BaselinePredictor(BaselineConfig(namespace.threshold), namespace.map_voxel)
    _write_labels(predictor, load_sequence(namespace.seq), namespace.out)


def evaluate(namespace: Namespace):
    sequences = [load_sequence(directory) for directory in namespace.seq]
    names = [os.path.basename(os.path.normpath(directory)) for directory in namespace.seq]

    if namespace.model is not None:
        predictor = ModelPredictor(load_checkpoint(namespace.model), projection_from(namespace),
                                   namespace.map_voxel, namespace.live_voxel, namespace.threshold)
        report = EvalReport(predictor.name,
                            [evaluate_sequence(sequence, predictor, namespace.corridor_width,
                                               namespace.range_limit, name)
                             for sequence, name in zip(sequences, names)])
    else:
        _, report = best_baseline_threshold(sequences, namespace.baseline_thresholds, namespace.corridor_width,
                                            namespace.range_limit, names=names)

    print(report)
    if namespace.out is not None:
        report.save(namespace.out)


def study(namespace: Namespace):
    config = StudyConfig(
        train_sequences=[load_sequence(directory) for directory in namespace.train_seq],
        test_sequences=[load_sequence(directory) for directory in namespace.test_seq],
        model_config=model_config_from(namespace),
        loss_weights=loss_weights_from(namespace),
        optimiser_config=optimiser_config_from(namespace),
        trainer_config=trainer_config_from(namespace),
        seed=namespace.seed,
        corridor_width=namespace.corridor_width,
        range_limit=namespace.range_limit,
        model=load_checkpoint(namespace.model) if namespace.model is not None else None,
        benchmark_frames=namespace.benchmark_frames,
        curve_steps=namespace.curve_steps,
        curve_interval=namespace.curve_interval,
        target_iou=namespace.target_iou,
        curve_seeds=namespace.curve_seeds,
        lr_scale=namespace.lr_scale
    )

    for name, table in run_study(namespace.kind, config).items():
        filename = os.path.join(namespace.out, f"{name}.csv")
        csv.save(table, filename)
        print(f"{filename}:\n{table}")


def benchmark(namespace: Namespace):
    sequence = load_sequence(namespace.seq)

    if namespace.model is not None:
        predictor: Predictor = ModelPredictor(load_checkpoint(namespace.model), projection_from(namespace),
                                              namespace.map_voxel, namespace.live_voxel)
    else:
        predictor = BaselinePredictor(BaselineConfig(namespace.threshold))

    print(f"{predictor.name}: {benchmark_inference(predictor, sequence.frames, namespace.frames)}")


def costmap(namespace: Namespace):
    sequence = load_sequence(namespace.seq)
    config = CostMapConfig(namespace.cell, namespace.half_extent)
    queue = CostMapQueue(namespace.queue_depth)

    for frame in sequence:
        name = constants.FRAME_NAME_FORMAT.format(frame.index)
        labels_table = csv.loadf(os.path.join(namespace.labels, name + ".csv"), types=[int, int])
        labels = np.array(labels_table.get_column("label"))
        if len(labels) != len(frame.live):
            raise ValueError(f"Labels of frame {frame.index} cover {len(labels)} of {len(frame.live)} points")

        changed = frame.live.subset(np.flatnonzero(labels))
        merged = queue.push(inflate(changed, namespace.robot_radius, config, frame.pose))

        pgm.save(merged.to_pgm(), os.path.join(namespace.out, name + ".pgm"))
        csv.save(merged.occupied_cells_csv(), os.path.join(namespace.out, name + ".csv"))


def _frame(sequence: RepeatSequence, index: int) -> Frame:
    for frame in sequence:
        if frame.index == index:
            return frame
    raise ValueError(f"Sequence has no frame {index}")


def _save_training_output(model, log, namespace: Namespace):
    save_checkpoint(model, namespace.out)
    _logger.info(f"Saved model to '{namespace.out}'")
    if namespace.log is not None:
        log.save(namespace.log)


def _write_labels(predictor: Predictor, sequence: RepeatSequence, directory: str):
    for frame in sequence:
        labels = predictor.predict(frame)
        table = CSVFile(constants.TRUTH_HEADER,
                        [[point, int(label)] for point, label in enumerate(labels)],
                        [int, int])
        csv.save(table, os.path.join(directory, constants.FRAME_NAME_FORMAT.format(frame.index) + ".csv"))
    _logger.info(f"Wrote {predictor.name} labels of {len(sequence)} frames to '{directory}'")
