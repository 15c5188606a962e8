from ._ArraySerialiser import ArraySerialiser
from ._DictSerialiser import DictSerialiser
from ._IntSerialiser import IntSerialiser
from ._ListSerialiser import ListSerialiser
from ._StringSerialiser import StringSerialiser
from ._TupleSerialiser import TupleSerialiser
