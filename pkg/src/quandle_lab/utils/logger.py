"""
Logging Utilities

Package logging for quandle_lab. The console handler writes to stderr so
that tables and JSON on stdout stay machine-readable; an optional file
handler records everything down to DEBUG.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from rich.console import Console
from rich.logging import RichHandler

ROOT_LOGGER = "quandle_lab"
DEFAULT_LEVEL = "WARNING"
FILE_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"
FILE_DATE_FORMAT = "%Y-%m-%dT%H:%M:%S"


def _level(level: Union[str, int]) -> int:
    if isinstance(level, int):
        return level
    value = logging.getLevelName(level.upper())
    if not isinstance(value, int):
        raise ValueError(f"Unknown log level '{level}'")
    return value


def _stderr_handler(level: int, rich_tracebacks: bool) -> logging.Handler:
    handler = RichHandler(
        console=Console(stderr=True),
        level=level,
        rich_tracebacks=rich_tracebacks,
        markup=True,
        show_time=level <= logging.DEBUG,
        show_path=False,
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    return handler


def _file_handler(path: Path) -> logging.Handler:
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(path, encoding="utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=FILE_DATE_FORMAT))
    return handler


def setup_logging(
    level: Union[str, int] = DEFAULT_LEVEL,
    log_file: Optional[Path] = None,
    rich_tracebacks: bool = True,
) -> logging.Logger:
    """
    Configure the package logger; calling it again replaces the handlers

    Args:
        level: Console threshold, a name such as "INFO" or a logging constant
        log_file: Also log every record to this file
        rich_tracebacks: Render exceptions with rich

    Returns:
        The quandle_lab logger

    Raises:
        ValueError: If level is not a logging level name
    """
    threshold = _level(level)
    root = logging.getLogger(ROOT_LOGGER)
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
    root.propagate = False
    root.addHandler(_stderr_handler(threshold, rich_tracebacks))
    if log_file:
        root.addHandler(_file_handler(log_file))
    root.setLevel(logging.DEBUG if log_file else threshold)
    return root


def get_logger(name: str = ROOT_LOGGER) -> logging.Logger:
    """Logger under the quandle_lab hierarchy, normally get_logger(__name__)"""
    return logging.getLogger(name)
