from typing import Any, Callable, TypeVar

# The generic return type of a callable
ReturnType = TypeVar("ReturnType")

# A callable with arbitrary arguments
GenericCallable = Callable[..., ReturnType]

# A decorator that preserves the signature of the callable it wraps
GenericDecorator = Callable[[GenericCallable], GenericCallable]
