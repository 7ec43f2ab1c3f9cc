"""Logging utilities for cosbound."""

import os
import sys
import time
from typing import Optional, TextIO

from ..core.records import Colors, colorize


LEVELS = {"debug": 10, "info": 20, "success": 25, "warning": 30, "error": 40}


class Logger:
    """Console logger with level filtering and color support."""

    def __init__(
        self,
        enable_timestamps: bool = True,
        level: str = "info",
        stream: Optional[TextIO] = None,
    ):
        """
        Initialize logger.

        Args:
            enable_timestamps: Whether to include timestamps in log output
            level: Minimum level that is printed
            stream: Output stream (defaults to stderr, keeping stdout for data)
        """
        self.enable_timestamps = enable_timestamps
        self.stream = stream
        self.set_level(level)

    def set_level(self, level: str) -> None:
        """Set the minimum printed level."""
        if level not in LEVELS:
            raise ValueError(f"unknown log level {level!r}")
        self.level = level

    @property
    def _out(self) -> TextIO:
        return self.stream if self.stream is not None else sys.stderr

    @property
    def _use_color(self) -> bool:
        if os.environ.get("NO_COLOR"):
            return False
        isatty = getattr(self._out, "isatty", None)
        return bool(isatty and isatty())

    def _get_timestamp(self) -> str:
        """Get formatted timestamp."""
        if not self.enable_timestamps:
            return ""
        ts = time.strftime("%Y-%m-%d %H:%M:%S", time.localtime())
        return f"{colorize(ts, Colors.GRAY, self._use_color)} "

    def _emit(self, level: str, tag: str, color: str, message: str) -> None:
        if LEVELS[level] < LEVELS[self.level]:
            return
        prefix = colorize(tag, color, self._use_color)
        print(f"{self._get_timestamp()}{prefix} {message}", file=self._out)

    def info(self, message: str) -> None:
        """Log info level message."""
        self._emit("info", "[INFO]", Colors.BLUE, message)

    def success(self, message: str) -> None:
        """Log success level message."""
        self._emit("success", "[SUCCESS]", Colors.GREEN, message)

    def warning(self, message: str) -> None:
        """Log warning level message."""
        self._emit("warning", "[WARNING]", Colors.YELLOW, message)

    def error(self, message: str) -> None:
        """Log error level message."""
        self._emit("error", "[ERROR]", Colors.RED, message)

    def debug(self, message: str) -> None:
        """Log debug level message."""
        self._emit("debug", "[DEBUG]", Colors.PURPLE, message)


_LOGGER: Optional[Logger] = None


def get_logger() -> Logger:
    """Return the process-wide logger."""
    global _LOGGER
    if _LOGGER is None:
        _LOGGER = Logger(enable_timestamps=True, level="warning")
    return _LOGGER
