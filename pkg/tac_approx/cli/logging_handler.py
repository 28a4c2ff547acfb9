from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any, Final

from typing_extensions import override

if TYPE_CHECKING:
    from rich.console import Console


class RichLogHandler(logging.Handler):
    """Logging handler printing records through a rich console.

    Messages are printed without markup: matrices such as `[[x, y]]` would otherwise be read as tags.
    """

    _level_emojis: Final[dict[str, str]] = {
        "DEBUG": "🔍",
        "INFO": "🧮",
        "WARNING": "⚠️",
        "ERROR": "🚨",
        "CRITICAL": "🔥",
    }
    _level_styles: Final[dict[str, str]] = {
        "DEBUG": "dim",
        "WARNING": "yellow",
        "ERROR": "bold red",
        "CRITICAL": "bold red",
    }

    def __init__(self, console: Console, *args: Any, **kwargs: Any) -> None:
        """Initialize the log handler.

        Args:
            console: Console the records are printed on, usually one writing to standard error.
            *args: Additional arguments for the logging handler.
            **kwargs: Additional keyword arguments for the logging handler.
        """
        super().__init__(*args, **kwargs)
        self.console = console

    @override
    def emit(self, record: logging.LogRecord) -> None:
        try:
            msg = self.format(record)
            self.console.print(msg, markup=False, style=self._level_styles.get(record.levelname))
        except Exception:  # noqa: BLE001
            self.handleError(record)

    @override
    def format(self, record: logging.LogRecord) -> str:
        """Format the record and prefix it with the emoji of its level."""
        msg = super().format(record)
        emoji = self._level_emojis.get(record.levelname)
        return f"{emoji} {msg}" if emoji else msg
