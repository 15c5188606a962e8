from typing import TypeVar, Dict, Type, Any, Optional

from ._get_argument_to_typevar import get_argument_to_typevar


class TypeVarProperty:
    """
    Class-level descriptor resolving (and caching) the argument that the
    accessing class supplies for a type variable of the owning generic class.
    """
    def __init__(self, typevar: TypeVar):
        self._typevar: TypeVar = typevar
        self._base_class: Optional[Type] = None
        self._cache: Dict[Type, Any] = {}

    def __get__(self, instance, owner):
        if owner not in self._cache:
            self._cache[owner] = get_argument_to_typevar(owner, self._base_class, self._typevar)

        return self._cache[owner]

    def __set_name__(self, owner, name):
        # Only the declaring class counts as the base
        if self._base_class is None:
            self._base_class = owner
