import csv
import gzip
import io
from typing import IO, Optional, List, Type

from ._CSVFile import CSVFile, DATA_TYPE, VALUE_TYPE, TYPES_TYPE


def loadf(filename: str,
          types: Optional[TYPES_TYPE] = None,
          encoding: str = 'utf-8') -> CSVFile:
    """
    Reads a CSV file (with a header row) from disk.

    :param filename:    The name of the file to read.
    :param types:       The column types, or None to estimate them from the data.
    :param encoding:    The encoding of the file.
    :return:            The loaded table.
    """
    open_func = gzip.open if filename.endswith(".gz") else open

    with open_func(filename, 'rt', encoding=encoding, newline='') as file:
        return load(file, types)


def loads(string: str, types: Optional[TYPES_TYPE] = None) -> CSVFile:
    """
    Reads a CSV table from a string.

    :param string:      Text in CSV format.
    :param types:       The column types, or None to estimate them from the data.
    :return:            The loaded table.
    """
    return load(io.StringIO(string), types)


def load(file: IO[str], types: Optional[TYPES_TYPE] = None) -> CSVFile:
    """
    Reads a CSV table from a text stream.

    :param file:        The stream.
    :param types:       The column types, or None to estimate them from the data.
    :return:            The loaded table.
    """
    rows = [row for row in csv.reader(file) if len(row) > 0]

    if len(rows) == 0:
        raise ValueError("CSV file has no header row")

    header, data = rows[0], rows[1:]

    if types is None:
        types = estimate_types(data, len(header))
    elif len(types) != len(header):
        raise ValueError(f"Got {len(types)} column types for {len(header)} columns")

    convert_columns(data, types)

    return CSVFile(header, data, types)


def estimate_types(data: DATA_TYPE, num_columns: int) -> List[Type[VALUE_TYPE]]:
    """
    Picks the narrowest of int, float and str that every value in a column converts to.

    :param data:            The raw (string) rows.
    :param num_columns:     The number of columns.
    :return:                The type of each column.
    """
    types = []
    for column_index in range(num_columns):
        column = [row[column_index] for row in data]
        for column_type in (int, float):
            try:
                for value in column:
                    column_type(value)
            except ValueError:
                continue
            types.append(column_type)
            break
        else:
            types.append(str)

    return types


def convert_columns(data: DATA_TYPE, types: TYPES_TYPE):
    """
    Converts the values of each row to the column types, in place.
    """
    for row in data:
        if len(row) != len(types):
            raise ValueError(f"Row has {len(row)} values, expected {len(types)}")

        for column_index, column_type in enumerate(types):
            row[column_index] = column_type(row[column_index])
