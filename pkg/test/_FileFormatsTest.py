import os
import tempfile

import numpy as np

from wai.test import AbstractTest
from wai.test.decorators import Test, ExceptionTest

from wai.lidarchange.file import csv, pgm, ply
from wai.lidarchange.file.csv import CSVFile
from wai.lidarchange.file.ply import PlyFormatError
from wai.lidarchange.geometry import PointCloud, WORLD_FRAME


class FileFormatsTest(AbstractTest):
    """
    Tests the PLY, PGM and CSV readers and writers.
    """
    @classmethod
    def subject_type(cls):
        return PointCloud

    @classmethod
    def common_arguments(cls):
        return ([[0.1, 0.2, 0.3], [1.0 / 3.0, -2.5, 1e-7]], [0.25, 1.0], WORLD_FRAME), {}

    @Test
    def ply_is_bit_identical(self, subject: PointCloud):
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, "cloud.ply")
            ply.save(subject, filename)
            self.assertEqual(ply.loadf(filename), subject)

    @Test
    def ply_empty_cloud(self, subject: PointCloud):
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, "empty.ply")
            ply.save(PointCloud.empty(), filename)
            self.assertEqual(len(ply.loadf(filename)), 0)

    @Test
    def ply_skips_other_elements(self, subject: PointCloud):
        text = ("ply\nformat ascii 1.0\nelement vertex 1\nproperty float x\nproperty float y\n"
                "property float z\nproperty uchar red\nelement face 1\nproperty list uchar int vertex_indices\n"
                "end_header\n1 2 3 255\n3 0 0 0\n")
        cloud = ply.loads(text)
        np.testing.assert_array_equal(cloud.positions, [[1.0, 2.0, 3.0]])
        self.assertFalse(cloud.has_intensity)

    @ExceptionTest(PlyFormatError)
    def ply_binary_format(self, subject: PointCloud):
        ply.loads("ply\nformat binary_little_endian 1.0\nelement vertex 0\nend_header\n")

    @ExceptionTest(PlyFormatError)
    def ply_vertex_list_property(self, subject: PointCloud):
        ply.loads("ply\nformat ascii 1.0\nelement vertex 1\nproperty float x\nproperty float y\n"
                  "property float z\nproperty list uchar float normals\nend_header\n1 2 3 2 0.5 0.5\n")

    @ExceptionTest(PlyFormatError)
    def ply_missing_coordinate(self, subject: PointCloud):
        ply.loads("ply\nformat ascii 1.0\nelement vertex 1\nproperty float x\nproperty float y\nend_header\n1 2\n")

    @Test
    def pgm_16_bit_ranges(self, subject: PointCloud):
        ranges = np.array([[0.0, 1.2344], [70.0, 9.999]])
        raster = pgm.range_raster_to_pgm(ranges)
        np.testing.assert_array_equal(raster, [[0, 1234], [65535, 9999]])

        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, "range.pgm")
            pgm.save(raster, filename)
            loaded = pgm.loadf(filename)

        self.assertEqual(loaded.dtype, np.uint16)
        np.testing.assert_array_equal(loaded, raster)

    @Test
    def pgm_8_bit_mask(self, subject: PointCloud):
        mask = pgm.mask_to_pgm(np.array([[0, 1], [1, 0]]))
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, "mask.pgm")
            pgm.save(mask, filename)
            np.testing.assert_array_equal(pgm.loadf(filename), [[0, 255], [255, 0]])

    @Test
    def csv_types(self, subject: PointCloud):
        table = CSVFile(["frame", "value", "name"], [[0, 0.1, "a"], [1, 1.0 / 3.0, "b"]])
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, "table.csv")
            csv.save(table, filename)
            loaded = csv.loadf(filename)

        self.assertEqual(loaded, table)
        self.assertEqual(loaded.types, [int, float, str])
        self.assertEqual(loaded.get_column("value")[1], 1.0 / 3.0)

    @ExceptionTest(ValueError)
    def csv_ragged_row(self, subject: PointCloud):
        csv.loads("a,b\n1,2\n3\n")
