"""
Package for reading and writing the CSV tables used for poses, truth
labels, training logs and reports.

Typical usage:
from wai.lidarchange.file.csv import loadf
table: CSVFile = loadf('poses.csv', types=[int] + [float] * 13)
"""
from ._CSVFile import CSVFile, HEADER_TYPE, TYPES_TYPE, VALUE_TYPE, ROW_TYPE, DATA_TYPE
from ._load import load, loadf, loads, estimate_types
from ._save import save
