"""
The root logger of the wai.lidarchange library.
"""
import logging

from ._standard_library_root_logger import create_standard_library_root_logger

# Package name all library loggers descend from
LIBRARY_ROOT_PACKAGE = "wai.lidarchange"

_root_logger: logging.Logger = create_standard_library_root_logger(LIBRARY_ROOT_PACKAGE)


def root_logger() -> logging.Logger:
    """
    Gets the root logger for the library. Free functions log through
    children of this logger, e.g. ``root_logger().getChild("costmap")``.

    :return:    The root logger.
    """
    return _root_logger
