import logging


class LoggingMixin:
    """
    Gives long-running objects (trainers, generators, study runners) a
    logger named after their defining module and class.
    """
    @property
    def logger(self) -> logging.Logger:
        cls = type(self)
        return logging.getLogger(f"{cls.__module__}.{cls.__name__}")
