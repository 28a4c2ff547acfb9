from __future__ import annotations

import importlib.metadata
import logging
import logging.config
from typing import Optional

import typer
from rich import print  # noqa: A004
from rich.console import Console
from rich.highlighter import ReprHighlighter
from rich.theme import Theme

logger = logging.getLogger(__name__)

app = typer.Typer(
    pretty_exceptions_short=True,
    pretty_exceptions_show_locals=False,
    rich_markup_mode="rich",
    no_args_is_help=True,
    help="Compute with totally acyclic complexes over quotients of polynomial rings.",
)


def show_version(value: Optional[bool]) -> None:  # noqa: FBT001
    """Show the version of the application."""
    if not value:
        return

    print(importlib.metadata.version("tac-approx"))
    raise typer.Exit(0)


@app.callback()
def main(  # noqa: D103
    *,
    version: Optional[bool] = typer.Option(  # noqa: ARG001
        None,
        "--version",
        is_eager=True,
        callback=show_version,
        help="Show the version and exit.",
    ),
    quiet: bool = typer.Option(
        False,  # noqa: FBT003
        help="Only log critical errors.",
    ),
    verbose: bool = typer.Option(
        False,  # noqa: FBT003
        help="Log every degree of every computation.",
    ),
) -> None:
    log_level = logging.DEBUG if verbose else logging.INFO
    if quiet:
        log_level = logging.CRITICAL

    logging_config: logging.config._DictConfigArgs = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "rich": {
                "format": "%(message)s",
                "datefmt": "[%X]",
            },
        },
        "handlers": {
            "null": {
                "class": "logging.NullHandler",
            },
            "rich": {
                "class": "tac_approx.cli.logging_handler.RichLogHandler",
                "formatter": "rich",
                "console": get_console(),
            },
        },
        "root": {
            "handlers": ["null"],
        },
        "loggers": {
            "tac_approx": {
                "level": log_level,
                "handlers": ["rich"],
                "propagate": True,
            },
        },
    }
    logging.config.dictConfig(logging_config)


def get_console() -> Console:
    """Console for logs; reports go to standard output undecorated."""
    theme = Theme(
        {
            "repr.matrix": "cyan",
            "repr.verdict_ok": "bold green",
            "repr.verdict_fail": "bold red",
            "repr.degree": "bold blue",
        },
    )
    return Console(stderr=True, soft_wrap=True, emoji=False, highlighter=SessionHighlighter(), theme=theme)


class SessionHighlighter(ReprHighlighter):
    """Highlight matrices, degrees and verdicts in log messages."""

    highlights = [  # noqa: RUF012
        *ReprHighlighter.highlights,
        r"(?P<matrix>\[\[[^\n]*?\]\])",
        r"(?P<degree>\b(?:deg|degree|rank) -?\d+\b)",
        r"(?P<verdict_ok>\b(?:homotopic|acyclic|passed)\b)",
        r"(?P<verdict_fail>\b(?:not homotopic|not acyclic|failed|does not)\b)",
    ]
