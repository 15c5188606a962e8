import math
from typing import Dict, List

from ..file.csv import CSVFile
from ..logging import LoggingMixin
from ..losses import LossWeights
from ..model import ChangeModel
from ..trainer import Trainer, finetune, train
from ._EvalReport import EvalReport
from ._functions import best_baseline_threshold, benchmark_inference, evaluate_sequence
from ._ModelPredictor import ModelPredictor
from ._Predictor import Predictor
from ._StudyConfig import StudyConfig, STUDY_KINDS

# Loss-term combinations of the ablation: name -> (chamfer, lambda1, lambda2) scale of the configured weights
ABLATION_ROWS = (
    ("cham", (1.0, 0.0, 0.0)),
    ("class", (0.0, 1.0, 0.0)),
    ("cham+class", (1.0, 1.0, 0.0)),
    ("cham+class+temporal", (1.0, 1.0, 1.0)),
)

METRIC_HEADER = ["iou_changed", "corridor_iou_changed", "miou", "changed_fraction"]


class StudyRunner(LoggingMixin):
    """
    Runs the comparative studies, each producing CSV tables.
    """
    def __init__(self, config: StudyConfig):
        self.config: StudyConfig = config

    def run(self, kind: str) -> Dict[str, CSVFile]:
        """
        Runs a study.

        :param kind:    One of STUDY_KINDS.
        :return:        The tables, by name.
        """
        if kind not in STUDY_KINDS:
            raise ValueError(f"Unknown study '{kind}', expected one of {', '.join(STUDY_KINDS)}")

        if len(self.config.test_sequences) == 0:
            raise ValueError(f"The {kind} study needs test sequences")

        return getattr(self, kind)()

    def voxel_sweep(self) -> Dict[str, CSVFile]:
        """
        IoU_ch of models trained and evaluated at every combination of map
        and live voxel size. Rows are map voxel sizes, columns live ones.
        """
        config = self.config
        self._require_training_data()

        header = ["map_voxel"] + [f"live_{voxel}" for voxel in config.live_voxels]
        iou_table = CSVFile(header, types=[float] * len(header))
        corridor_table = CSVFile(header, types=[float] * len(header))

        for map_voxel in config.map_voxels:
            iou_row, corridor_row = [map_voxel], [map_voxel]
            for live_voxel in config.live_voxels:
                self.logger.info(f"Voxel sweep: map {map_voxel} m, live {live_voxel} m")
                trainer_config = config.trainer_config.replace(map_voxel=map_voxel, live_voxel=live_voxel)
                model, _ = train(config.train_sequences, config.model_config, config.loss_weights,
                                 config.optimiser_config, trainer_config, config.seed)
                report = self._evaluate(ModelPredictor(model, trainer_config.projection, map_voxel, live_voxel))
                iou_row.append(report.iou_changed)
                corridor_row.append(report.corridor_iou_changed)
            iou_table.append(iou_row)
            corridor_table.append(corridor_row)

        return {"voxel_sweep_iou": iou_table, "voxel_sweep_corridor_iou": corridor_table}

    def loss_ablation(self) -> Dict[str, CSVFile]:
        """
        Metrics of models trained with subsets of the loss terms.
        """
        config = self.config
        self._require_training_data()

        table = CSVFile(["losses"] + METRIC_HEADER, types=[str] + [float] * len(METRIC_HEADER))
        weights = config.loss_weights
        for name, (chamfer, lambda1, lambda2) in ABLATION_ROWS:
            self.logger.info(f"Loss ablation: {name}")
            row_weights = LossWeights(weights.lambda1 * lambda1, weights.lambda2 * lambda2, weights.chamfer * chamfer)
            model, _ = train(config.train_sequences, config.model_config, row_weights,
                             config.optimiser_config, config.trainer_config, config.seed)
            report = self._evaluate(self._model_predictor(model))
            table.append([name] + self._metrics(report))

        return {"loss_ablation": table}

    def method_compare(self) -> Dict[str, CSVFile]:
        """
        Metrics (and optionally runtimes) of the trained model against the
        tuned nearest-neighbour baseline, or of the configured predictors.
        """
        config = self.config

        reports: List[EvalReport] = []
        predictors: Dict[str, Predictor] = {}
        if config.predictors is not None:
            predictors = dict(config.predictors)
        else:
            _, baseline_report = best_baseline_threshold(config.test_sequences, config.baseline_thresholds,
                                                         config.corridor_width, config.range_limit,
                                                         config.trainer_config.map_voxel, self._names())
            reports.append(baseline_report)

            model = config.model
            if model is None:
                self._require_training_data()
                model, _ = train(config.train_sequences, config.model_config, config.loss_weights,
                                 config.optimiser_config, config.trainer_config, config.seed)
            predictors["model"] = self._model_predictor(model)

        for name, predictor in predictors.items():
            report = self._evaluate(predictor)
            report.method = name
            reports.append(report)

        header = ["method"] + METRIC_HEADER + ["runtime", "note"]
        table = CSVFile(header, types=[str] + [float] * len(METRIC_HEADER) + [str, str])
        for report in reports:
            runtime = ""
            if config.benchmark_frames > 0 and report.method in predictors:
                frames = [frame for sequence in config.test_sequences for frame in sequence]
                runtime = str(benchmark_inference(predictors[report.method], frames, config.benchmark_frames))
            table.append([report.method] + self._metrics(report) + [runtime, report.note])

        return {"method_compare": table}

    def finetune_curve(self) -> Dict[str, CSVFile]:
        """
        IoU_ch on the test sequences over the first steps of training on
        them, for a model pre-trained on the training sequences and
        fine-tuned at a reduced learning rate against one trained from
        scratch. Each seed pre-trains its own model. The steps table holds,
        per seed, the first evaluated step at which each run reaches the
        target IoU_ch (inf when it never does).
        """
        config = self.config
        self._require_training_data()

        # Every run takes exactly curve_steps steps
        curve_config = config.trainer_config.replace(epochs=max(config.curve_steps, 1),
                                                     patience=max(config.curve_steps, 1),
                                                     max_steps=config.curve_steps)

        curve = CSVFile(["seed", "method", "step", "iou_changed"], types=[int, str, int, float])
        steps = CSVFile(["seed", "finetune_steps", "scratch_steps"], types=[int, float, float])
        for seed in config.curve_seeds:
            self.logger.info(f"Fine-tuning curve: pre-training with seed {seed}")
            pretrained, _ = train(config.train_sequences, config.model_config, config.loss_weights,
                                  config.optimiser_config, config.trainer_config, seed)

            reached = {}
            for method in ("finetune", "scratch"):
                points = []

                def record(step: int, model: ChangeModel):
                    if step % config.curve_interval == 0 or step == config.curve_steps:
                        points.append((step, self._evaluate(self._model_predictor(model)).iou_changed))

                if method == "finetune":
                    record(0, pretrained)
                    finetune(pretrained, config.test_sequences, config.lr_scale, config.loss_weights,
                             config.optimiser_config, curve_config, seed, callback=record)
                else:
                    model = ChangeModel(config.model_config, seed)
                    record(0, model)
                    trainer = Trainer(model, config.loss_weights, config.optimiser_config, curve_config, seed)
                    trainer.fit(config.test_sequences, record)

                for step, iou_changed in points:
                    curve.append([seed, method, step, iou_changed])
                reached[method] = next((float(step) for step, iou_changed in points
                                        if iou_changed >= config.target_iou), math.inf)
                self.logger.info(f"Seed {seed}, {method}: target IoU_ch {config.target_iou} reached "
                                 f"after {reached[method]} steps")

            steps.append([seed, reached["finetune"], reached["scratch"]])

        return {"finetune_curve": curve, "finetune_steps": steps}

    def _evaluate(self, predictor: Predictor) -> EvalReport:
        evaluations = [evaluate_sequence(sequence, predictor, self.config.corridor_width,
                                         self.config.range_limit, name)
                       for sequence, name in zip(self.config.test_sequences, self._names())]
        return EvalReport(predictor.name, evaluations)

    def _model_predictor(self, model) -> ModelPredictor:
        trainer_config = self.config.trainer_config
        return ModelPredictor(model, trainer_config.projection, trainer_config.map_voxel, trainer_config.live_voxel)

    def _names(self) -> List[str]:
        return [f"sequence{index}" for index in range(len(self.config.test_sequences))]

    def _require_training_data(self):
        if len(self.config.train_sequences) == 0:
            raise ValueError("This study trains models and needs training sequences")

    @staticmethod
    def _metrics(report: EvalReport) -> List[float]:
        return [report.iou_changed, report.corridor_iou_changed, report.miou,
                report.counts.predicted_changed_fraction]
