"""
Custom decorators.
"""
from ._ensure_error_type import ensure_error_type
