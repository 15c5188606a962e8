from typing import IO

import javaproperties

from ..decorator import ensure_error_type
from ..file import FileReader
from ._SceneSpec import SceneSpec


class SceneSpecFileReader(FileReader[str, SceneSpec, "SceneSpecFileReader"]):
    """
    Reader for scene specifications stored as Java properties files.
    """
    @ensure_error_type(ValueError, "Invalid scene specification: {0}")
    def _load(self, file: IO[str]) -> SceneSpec:
        return SceneSpec.from_properties(javaproperties.load(file))
