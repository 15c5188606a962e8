from .._functions import ensure_directory
from ._CSVFile import CSVFile


def save(csv: CSVFile, filename: str, encoding: str = 'utf-8'):
    """
    Saves a table to disk, creating the directory if needed.

    :param csv:         The table to save.
    :param filename:    The filename to save the table under.
    :param encoding:    The string encoding to use.
    """
    ensure_directory(filename)
    with open(filename, 'w', encoding=encoding, newline='') as file:
        file.write(str(csv))
