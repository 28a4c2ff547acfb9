from __future__ import annotations

import io
import logging

import pytest
from rich.console import Console

from tac_approx.cli.logging_handler import RichLogHandler

pytestmark = [
    pytest.mark.unit,
]


def _record(level: int, msg: str, *args: object) -> logging.LogRecord:
    return logging.LogRecord("tac_approx.test", level, __file__, 1, msg, args, None)


class Test_RichLogHandler:
    def test_prefixes_level_emoji(self) -> None:
        # Arrange
        handler = RichLogHandler(Console(file=io.StringIO(), color_system=None, width=120))

        # Act
        text = handler.format(_record(logging.WARNING, "Ring %r is not supported", "P"))

        # Assert
        assert text == "⚠️ Ring 'P' is not supported"

    def test_keeps_matrix_brackets(self) -> None:
        # Arrange
        output = io.StringIO()
        handler = RichLogHandler(Console(file=output, color_system=None, width=120))

        # Act
        handler.emit(_record(logging.INFO, "Relations %s", "[[x, y]]"))

        # Assert
        assert output.getvalue() == "🧮 Relations [[x, y]]\n"
