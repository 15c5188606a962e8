from abc import abstractmethod
from typing import IO, TypeVar

from ._FileIOBase import FileIOBase, ObjectType, DiskType
from ._functions import ensure_directory

SelfType = TypeVar("SelfType", bound="FileWriter")


class FileWriter(FileIOBase[DiskType, ObjectType, SelfType]):
    """
    Base class for writers.
    """
    def dump(self, obj: ObjectType):
        """
        Writes an object to the current stream. On failure the partial
        output is truncated away.

        :param obj:     The object to write.
        """
        self.ensure_file()

        pre_dump_position = self._file.tell()
        try:
            return self._dump(obj, self._file)
        except Exception:
            self._file.seek(pre_dump_position)
            self._file.truncate()
            raise

    def dumpf(self, filename: str, *objects: ObjectType, append: bool = False):
        """
        Writes objects to a file, creating its directory if needed.

        :param filename:    The file to write to.
        :param objects:     The objects to write.
        :param append:      Whether to append to an existing file.
        """
        ensure_directory(filename)
        with self.set_file(self.open(filename, append)) as writer:
            for obj in objects:
                writer.dump(obj)

    def dumps(self, *objects: ObjectType) -> DiskType:
        """
        Writes objects to in-memory text/bytes.

        :param objects:     The objects to write.
        :return:            The written contents.
        """
        memory_file: IO[DiskType] = self.get_memory_file()

        self.set_file(memory_file)
        for obj in objects:
            self.dump(obj)

        return memory_file.getvalue()

    @classmethod
    def open(cls, filename: str, append: bool = False) -> IO[DiskType]:
        return cls._open(filename, 'a' if append else 'w')

    @abstractmethod
    def _dump(self, obj: ObjectType, file: IO[DiskType]):
        """
        Writes one object to the (writable) stream.

        :param obj:     The object to write.
        :param file:    The stream.
        """
        pass

    @classmethod
    def _check_file(cls, file: IO[DiskType]):
        super()._check_file(file)

        if not file.writable():
            raise ValueError("File not writable")
