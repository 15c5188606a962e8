"""
Typing helpers used by the generic file readers and writers.
"""
from ._get_argument_to_typevar import get_argument_to_typevar
from ._TypeVarProperty import TypeVarProperty
from ._typing import GenericCallable, GenericDecorator
