import inspect
from functools import wraps
from typing import Type

from ..meta import GenericCallable, GenericDecorator


def ensure_error_type(error_type: Type[Exception],
                      format_message: str = "{0.__class__.__name__}: {0}") -> GenericDecorator:
    """
    Decorator which makes sure every exception leaving the decorated
    function is of the given type. Exceptions already of that type pass
    through unchanged; anything else is chained onto a new error of the
    given type.

    :param error_type:      The type of error to ensure.
    :param format_message:  The message for wrapped errors. Positional argument 0 is
                            the original exception; the decorated function's arguments
                            are available by name.
    :return:                The decorator.
    """
    def decorator(function: GenericCallable) -> GenericCallable:
        signature = inspect.signature(function)

        @wraps(function)
        def with_ensured_error_type(*args, **kwargs):
            try:
                return function(*args, **kwargs)
            except error_type:
                raise
            except Exception as e:
                binding = signature.bind(*args, **kwargs)
                binding.apply_defaults()
                raise error_type(format_message.format(e, **binding.arguments)) from e

        return with_ensured_error_type

    return decorator
