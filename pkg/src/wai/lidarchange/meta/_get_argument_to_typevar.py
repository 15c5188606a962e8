from typing import Type, TypeVar, Any

import typing_inspect


def get_argument_to_typevar(cls: Type, generic_base_class: Type, typevar: TypeVar) -> Any:
    """
    Gets the concrete argument a sub-class supplies for one of the type
    variables of a generic base class, e.g. the ``str`` in
    ``class PlyFileReader(FileReader[str, PointCloud, "PlyFileReader"])``.

    :param cls:                 The sub-class specifying the argument.
    :param generic_base_class:  The generic base-class declaring the type variable.
    :param typevar:             The type variable to resolve.
    :return:                    The argument, or the type variable itself if
                                'cls' leaves it unbound.
    """
    if not issubclass(cls, generic_base_class):
        raise ValueError(f"{cls.__name__} does not derive from {generic_base_class.__name__}")

    if not typing_inspect.is_generic_type(generic_base_class):
        raise TypeError(f"{generic_base_class.__name__} is not a generic type")

    if typevar not in typing_inspect.get_parameters(generic_base_class):
        raise ValueError(f"{typevar} is not a generic parameter of {generic_base_class.__name__}")

    return _resolve(cls, generic_base_class, typevar)


def _resolve(cls: Type, generic_base_class: Type, typevar: TypeVar) -> Any:
    """
    Walks from 'cls' up to the generic base class, substituting
    intermediate type variables on the way back down.
    """
    for generic_base in typing_inspect.get_generic_bases(cls):
        origin = typing_inspect.get_origin(generic_base)
        if not isinstance(origin, type) or not issubclass(origin, generic_base_class):
            continue

        if origin is generic_base_class:
            index = typing_inspect.get_parameters(generic_base_class).index(typevar)
        else:
            # Resolve against the intermediate class, then map its own parameter
            argument = _resolve(origin, generic_base_class, typevar)
            if not typing_inspect.is_typevar(argument):
                return argument
            index = typing_inspect.get_parameters(origin).index(argument)

        return typing_inspect.get_args(generic_base)[index]

    # Plain (non-parameterised) inheritance
    for base in cls.__bases__:
        if base is not generic_base_class and isinstance(base, type) and issubclass(base, generic_base_class):
            return _resolve(base, generic_base_class, typevar)

    return typevar
