import logging


def create_standard_library_root_logger(library_root_package: str) -> logging.Logger:
    """
    Creates the root logger for a library: a logger with only a null
    handler attached, so nothing is emitted unless the application
    configures logging itself.

    :param library_root_package:    The package name of the library.
    :return:                        The library's root logger.
    """
    library_root_logger: logging.Logger = logging.getLogger(library_root_package)

    if any(isinstance(handler, logging.NullHandler) for handler in library_root_logger.handlers):
        library_root_logger.debug(f"Library root logger '{library_root_package}' already configured")
    else:
        library_root_logger.addHandler(logging.NullHandler())

    return library_root_logger
