"""
Binary serialisation of values to and from byte streams.
"""
from ._Serialiser import Serialiser, read_exactly
