import math
import os

import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, ExceptionTest

from wai.lidarchange.dataset import SceneSpec, generate_sequence
from wai.lidarchange.eval import StudyConfig, best_baseline_threshold, run_study
from wai.lidarchange.trainer import OptimiserConfig, TrainerConfig

from ._helpers import SMALL_PROJECTION, small_model_config, small_sequence

# Set to 1 to run the studies that train full-size models on the cluttered scene
ACCEPTANCE_VARIABLE = "LIDARCHANGE_ACCEPTANCE"


def cluttered_config(**kwargs) -> StudyConfig:
    """
    Study settings on the cluttered example scene at the default raster
    and architecture.
    """
    settings = {
        "train_sequences": [generate_sequence(SceneSpec.cluttered_example(), seed=0)],
        "test_sequences": [generate_sequence(SceneSpec.cluttered_example(), seed=1)],
        "optimiser_config": OptimiserConfig(3e-3),
        "trainer_config": TrainerConfig(epochs=100, patience=100, max_steps=600),
    }
    settings.update(kwargs)
    return StudyConfig(**settings)


class StudyTest(AbstractTest):
    """
    Runs the comparative studies: small versions on the small scene, and
    full versions on the cluttered example scene when acceptance runs are
    enabled.
    """
    @classmethod
    def subject_type(cls):
        return StudyConfig

    @classmethod
    def common_arguments(cls):
        return (), {
            "train_sequences": [small_sequence(seed=0)],
            "test_sequences": [small_sequence(seed=1)],
            "model_config": small_model_config(),
            "optimiser_config": OptimiserConfig(3e-2),
            "trainer_config": TrainerConfig(epochs=200, patience=200, max_steps=200, threads=1,
                                            projection=SMALL_PROJECTION),
            "map_voxels": [0.2],
            "live_voxels": [0.05, 0.1],
            "baseline_thresholds": [0.1, 0.3],
            "curve_steps": 20,
            "curve_interval": 5,
            "curve_seeds": [0],
            "target_iou": 0.3
        }

    def require_acceptance(self):
        if os.environ.get(ACCEPTANCE_VARIABLE) != "1":
            self.skipTest(f"set {ACCEPTANCE_VARIABLE}=1 to run")

    @Test
    def loss_ablation(self, subject: StudyConfig):
        table = run_study("loss_ablation", subject)["loss_ablation"]

        self.assertEqual(table.get_column("losses"), ["cham", "class", "cham+class", "cham+class+temporal"])
        changed_fraction = dict(zip(table.get_column("losses"), table.get_column("changed_fraction")))
        iou_changed = dict(zip(table.get_column("losses"), table.get_column("iou_changed")))

        self.assertGreaterEqual(changed_fraction["cham"], 0.99)
        self.assertLessEqual(changed_fraction["class"], 0.01)
        self.assertGreater(iou_changed["cham+class"], 0.0)

        # Every change of the small scene lies inside the corridor
        for name, full, corridor in zip(table.get_column("losses"), table.get_column("iou_changed"),
                                        table.get_column("corridor_iou_changed")):
            with self.subTest(losses=name):
                self.assertGreaterEqual(corridor, full)

    @Test
    def voxel_sweep(self, subject: StudyConfig):
        tables = run_study("voxel_sweep", subject)

        self.assertEqual(set(tables), {"voxel_sweep_iou", "voxel_sweep_corridor_iou"})
        self.assertEqual(tables["voxel_sweep_iou"].header, ["map_voxel", "live_0.05", "live_0.1"])
        self.assertEqual(len(tables["voxel_sweep_iou"]), 1)
        for full, corridor in zip(tables["voxel_sweep_iou"].data[0][1:],
                                  tables["voxel_sweep_corridor_iou"].data[0][1:]):
            self.assertGreaterEqual(corridor, full)

    @Test
    def method_compare(self, subject: StudyConfig):
        table = run_study("method_compare", subject)["method_compare"]

        self.assertEqual(table.get_column("method"), ["baseline", "model"])
        self.assertTrue(table.get_column("note")[0].endswith("(best of 2)"))
        self.assertTrue(np.isfinite(table.get_column("miou")).all())

    @Test
    def finetune_curve(self, subject: StudyConfig):
        tables = run_study("finetune_curve", subject)

        curve = tables["finetune_curve"]
        self.assertEqual(curve.header, ["seed", "method", "step", "iou_changed"])
        self.assertEqual(curve.get_column("method"), ["finetune"] * 5 + ["scratch"] * 5)
        self.assertEqual(curve.get_column("step"), [0, 5, 10, 15, 20] * 2)
        for value in curve.get_column("iou_changed"):
            self.assertTrue(0.0 <= value <= 1.0)

        steps = tables["finetune_steps"]
        self.assertEqual(steps.header, ["seed", "finetune_steps", "scratch_steps"])
        self.assertEqual(steps.get_column("seed"), [0])

    @Test
    def baseline_struggles_in_cluttered_scene(self, subject: StudyConfig):
        sequence = generate_sequence(SceneSpec.cluttered_example(), seed=1)
        _, report = best_baseline_threshold([sequence], map_voxel=0.2)

        self.assertLess(report.iou_changed, 0.9)

    @ExceptionTest(ValueError)
    def unknown_study(self, subject: StudyConfig):
        run_study("bogus", subject)

    @ExceptionTest(ValueError)
    def empty_curve_seeds(self, subject: StudyConfig):
        StudyConfig(curve_seeds=[])

    @Test
    def temporal_term_improves_cluttered_scene(self, subject: StudyConfig):
        self.require_acceptance()
        table = run_study("loss_ablation", cluttered_config())["loss_ablation"]

        iou_changed = dict(zip(table.get_column("losses"), table.get_column("iou_changed")))
        self.assertGreater(iou_changed["cham+class+temporal"], iou_changed["cham+class"])

    @Test
    def model_beats_baseline_in_cluttered_scene(self, subject: StudyConfig):
        self.require_acceptance()
        table = run_study("method_compare", cluttered_config())["method_compare"]

        iou_changed = dict(zip(table.get_column("method"), table.get_column("iou_changed")))
        self.assertGreaterEqual(iou_changed["model"], iou_changed["baseline"] + 0.05)

    @Test
    def finetuning_reaches_target_sooner(self, subject: StudyConfig):
        self.require_acceptance()
        config = cluttered_config(curve_steps=200, curve_interval=10, target_iou=0.5, curve_seeds=[0, 1, 2])
        steps = run_study("finetune_curve", config)["finetune_steps"]

        for seed, finetune_steps, scratch_steps in steps.data:
            with self.subTest(seed=seed):
                self.assertTrue(math.isfinite(finetune_steps))
                self.assertLess(finetune_steps, scratch_steps)

    @Test
    def coarse_live_voxels_degrade_corridor_iou(self, subject: StudyConfig):
        self.require_acceptance()
        config = cluttered_config(map_voxels=[0.2], live_voxels=[0.05, 0.3])
        table = run_study("voxel_sweep", config)["voxel_sweep_corridor_iou"]

        _, fine, coarse = table.data[0]
        self.assertLessEqual(coarse, 0.5 * fine)
