import csv
import io
from typing import List, Optional, Union, Type

# The type of the header section
HEADER_TYPE = List[str]

# The type of the column types
TYPES_TYPE = List[Union[Type[int], Type[float], Type[str]]]

# The type of the data section
VALUE_TYPE = Union[int, float, str]
ROW_TYPE = List[VALUE_TYPE]
DATA_TYPE = List[ROW_TYPE]


class CSVFile:
    """
    A CSV table held in memory: a header row plus typed data rows.
    """
    def __init__(self,
                 header: HEADER_TYPE,
                 data: Optional[DATA_TYPE] = None,
                 types: Optional[TYPES_TYPE] = None):
        if data is None:
            data = []

        for row_index, row in enumerate(data):
            if len(row) != len(header):
                raise ValueError(f"Row {row_index} has {len(row)} values but the header has {len(header)}")

        if types is None:
            types = [type(value) for value in data[0]] if len(data) > 0 else [str] * len(header)

        self.header: HEADER_TYPE = list(header)
        self.types: TYPES_TYPE = list(types)
        self.data: DATA_TYPE = [list(row) for row in data]

    def __len__(self) -> int:
        return len(self.data)

    def __eq__(self, other):
        return isinstance(other, CSVFile) and self.header == other.header and self.data == other.data

    def append(self, row: ROW_TYPE):
        """
        Adds a data row.
        """
        if len(row) != len(self.header):
            raise ValueError(f"Row has {len(row)} values but the header has {len(self.header)}")

        self.data.append(list(row))

    def get_column(self, column: Union[int, str]) -> List[VALUE_TYPE]:
        """
        Gets a column of data by index or header name.
        """
        if isinstance(column, str):
            column = self.header.index(column)

        return [row[column] for row in self.data]

    def __str__(self) -> str:
        buffer: io.StringIO = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")

        writer.writerow(self.header)
        for row in self.data:
            writer.writerow([repr(float(value)) if isinstance(value, float) else value for value in row])

        return buffer.getvalue()
