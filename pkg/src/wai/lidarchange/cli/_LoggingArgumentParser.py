from argparse import ArgumentParser
from sys import stderr
from typing import IO, NoReturn, Optional

from ..logging import LoggingMixin

# Exit status of argparse for usage errors
USAGE_ERROR_STATUS = 2


class LoggingArgumentParser(ArgumentParser, LoggingMixin):
    """
    Argument parser of the command-line tool. Help, usage and parse errors
    go to the log instead of straight to stdout/stderr: anything meant for
    stderr is logged as an error, the rest (help, version) as a warning so
    it shows at the default level.
    """
    def _print_message(self, message: str, file: Optional[IO[str]] = None):
        message = message.rstrip("\n")
        if not message:
            return

        if file is None or file is stderr:
            self.logger.error(message)
        else:
            self.logger.warning(message)

    def error(self, message: str) -> NoReturn:
        # One record holding both the usage and the problem
        self.logger.error(f"{self.format_usage().rstrip()}\n{self.prog}: error: {message}")
        self.exit(USAGE_ERROR_STATUS)
