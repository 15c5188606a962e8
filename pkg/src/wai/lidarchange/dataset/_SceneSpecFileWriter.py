from typing import IO

import javaproperties

from ..file import FileWriter
from ._SceneSpec import SceneSpec


class SceneSpecFileWriter(FileWriter[str, SceneSpec, "SceneSpecFileWriter"]):
    """
    Writer for scene specifications as Java properties files.
    """
    def _dump(self, obj: SceneSpec, file: IO[str]):
        print(javaproperties.to_comment("Synthetic teach-and-repeat scene (Java properties file format)"), file=file)
        javaproperties.dump(obj.to_properties(), file, timestamp=False, sort_keys=True)
