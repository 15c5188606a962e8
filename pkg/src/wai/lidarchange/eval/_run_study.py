from typing import Dict

from ..file.csv import CSVFile
from ._StudyConfig import StudyConfig
from ._StudyRunner import StudyRunner


def run_study(kind: str, config: StudyConfig) -> Dict[str, CSVFile]:
    """
    Runs one of the studies ('voxel_sweep', 'loss_ablation',
    'method_compare' or 'finetune_curve') and returns its tables by name.
    """
    return StudyRunner(config).run(kind)
