"""
The wai-lidarchange command-line tool.
"""
from ._LoggingArgumentParser import LoggingArgumentParser
from ._main import create_parser, main, sys_main, PROGRAM
