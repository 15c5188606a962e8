from typing import IO, List, Tuple

import numpy as np

from ...decorator import ensure_error_type
from ...geometry import PointCloud, SENSOR_FRAME
from .._FileReader import FileReader
from ._error import PlyFormatError
from . import constants


class PlyFileReader(FileReader[str, PointCloud, "PlyFileReader"]):
    """
    Reader for ASCII PLY files.
    """
    @ensure_error_type(PlyFormatError, "Couldn't read PLY data: {0}")
    def _load(self, file: IO[str]) -> PointCloud:
        elements, frame_id = read_header(file)

        cloud = None
        for name, count, properties in elements:
            rows = [file.readline() for _ in range(count)]

            if name != constants.VERTEX_ELEMENT:
                continue

            if cloud is not None:
                raise PlyFormatError("More than one vertex element")

            cloud = parse_vertices(rows, properties, frame_id)

        if cloud is None:
            raise PlyFormatError("No vertex element in PLY header")

        # Consume any trailing blank lines so the reader reaches EOF
        position = file.tell()
        while file.readline().strip() == "":
            if file.tell() == position:
                break
            position = file.tell()
        file.seek(position)

        return cloud


def read_header(file: IO[str]) -> Tuple[List[Tuple[str, int, List[str]]], str]:
    """
    Reads the PLY header.

    :param file:    The stream, positioned at the start of the file.
    :return:        The elements (name, count, property names) in file order,
                    and the frame tag from the header comments.
    """
    if file.readline().strip() != constants.MAGIC:
        raise PlyFormatError("Missing 'ply' magic line")

    elements: List[Tuple[str, int, List[str]]] = []
    frame_id = SENSOR_FRAME
    format_seen = False

    while True:
        line = file.readline()
        if line == "":
            raise PlyFormatError("Header ended before 'end_header'")

        tokens = line.split()
        if len(tokens) == 0:
            continue

        keyword = tokens[0]
        if keyword == constants.END_HEADER:
            break
        elif keyword == "format":
            if " ".join(tokens) != constants.FORMAT_ASCII:
                raise PlyFormatError(f"Only '{constants.FORMAT_ASCII}' is supported, got '{line.strip()}'")
            format_seen = True
        elif keyword == constants.COMMENT_KEYWORD:
            if len(tokens) == 3 and tokens[1] == constants.FRAME_ID_COMMENT:
                frame_id = tokens[2]
        elif keyword == constants.OBJ_INFO_KEYWORD:
            continue
        elif keyword == constants.ELEMENT_KEYWORD:
            elements.append((tokens[1], int(tokens[2]), []))
        elif keyword == constants.PROPERTY_KEYWORD:
            if len(elements) == 0:
                raise PlyFormatError("Property declared before any element")
            # List properties are 'property list <count type> <item type> <name>'
            if len(tokens) > 1 and tokens[1] == constants.LIST_KEYWORD and elements[-1][0] == constants.VERTEX_ELEMENT:
                raise PlyFormatError(f"List property '{tokens[-1]}' on the vertex element is not supported")
            elements[-1][2].append(tokens[-1])
        else:
            raise PlyFormatError(f"Unrecognised header line '{line.strip()}'")

    if not format_seen:
        raise PlyFormatError("Missing format line")

    return elements, frame_id


def parse_vertices(rows: List[str], properties: List[str], frame_id: str) -> PointCloud:
    """
    Parses the data rows of the vertex element.

    :param rows:        The raw data lines.
    :param properties:  The declared vertex property names.
    :param frame_id:    The frame tag for the cloud.
    :return:            The point cloud.
    """
    for required in (constants.X, constants.Y, constants.Z):
        if required not in properties:
            raise PlyFormatError(f"Vertex element has no '{required}' property")

    values = np.zeros((len(rows), len(properties)), dtype=np.float64)
    for row_index, row in enumerate(rows):
        tokens = row.split()
        if len(tokens) != len(properties):
            raise PlyFormatError(f"Vertex {row_index} has {len(tokens)} values, expected {len(properties)}")
        values[row_index] = [float(token) for token in tokens]

    positions = values[:, [properties.index(axis) for axis in (constants.X, constants.Y, constants.Z)]]

    intensity = None
    if constants.INTENSITY in properties:
        intensity = values[:, properties.index(constants.INTENSITY)]

    return PointCloud(positions, intensity, frame_id)
