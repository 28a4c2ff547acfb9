from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Optional

import typer
from pydantic import ValidationError

from tac_approx.algebra import AlgebraError
from tac_approx.complexes import ComplexError
from tac_approx.functors import FunctorError
from tac_approx.resolution import ResolutionError
from tac_approx.session import COMMANDS, SessionError, parse_session, run_session
from tac_approx.settings import Settings
from tac_approx.utils.timeout import ComputationTimeoutError, Timeout

from .app import app

if TYPE_CHECKING:
    from tac_approx.session import CommandResult, Session

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2


@app.command()
def run(  # noqa: PLR0913
    session_file: typer.FileText = typer.Argument(
        ...,
        help="Session file to run; `-` reads standard input.",
        show_default=False,
    ),
    *,
    machine: bool = typer.Option(
        False,  # noqa: FBT003
        help="Print a key/value block per command instead of the report.",
    ),
    command: Optional[list[str]] = typer.Option(
        None,
        "--command",
        help="Run only commands with this name; can be given multiple times.",
        show_default=False,
    ),
    window: tuple[int, int] = typer.Option(
        (None, None),
        help="Degrees checked by commands that do not name a window.",
        show_default=False,
    ),
    max_length: Optional[int] = typer.Option(
        None,
        help="Longest resolution computed while waiting for periodicity.",
        show_default=False,
    ),
    seed: Optional[int] = typer.Option(
        None,
        help="Seed of the random combinations used when searching for equivalences.",
        show_default=False,
    ),
    progress: bool = typer.Option(
        False,  # noqa: FBT003
        help="Show progress bars while resolving.",
    ),
    timeout_seconds: Optional[int] = typer.Option(
        None,
        help="Stop the session after this many seconds.",
        show_default=False,
    ),
) -> None:
    """Run the commands of a session file.

    Exits with 1 when a verification fails or a computation stops, and with 2 when the session does not parse.
    """
    unknown = sorted(set(command or ()) - set(COMMANDS))
    if unknown:
        logger.error("Unknown commands: %s; commands: %s", ", ".join(unknown), ", ".join(sorted(COMMANDS)))
        raise typer.Exit(EXIT_USAGE)

    try:
        session = parse_session(session_file.read())
        settings = Settings.from_session(
            session,
            default_window=window if window[0] is not None else None,
            max_resolution_length=max_length,
            seed=seed,
            progress=progress or None,
        )
    except SessionError as err:
        logger.error("%s", err)  # noqa: TRY400
        raise typer.Exit(EXIT_USAGE) from None
    except ValidationError as err:
        logger.error("Invalid settings: %s", err.errors()[0]["msg"])  # noqa: TRY400
        raise typer.Exit(EXIT_USAGE) from None

    _run(session, settings, command, machine=machine, timeout_seconds=timeout_seconds)


def _run(
    session: Session,
    settings: Settings,
    commands: list[str] | None,
    *,
    machine: bool,
    timeout_seconds: int | None,
) -> None:
    failed: list[str] = []
    count = 0
    try:
        with Timeout(timeout_seconds):
            for result in run_session(session, settings, commands=commands):
                if count:
                    typer.echo()

                _echo(result, machine=machine)
                count += 1
                if not result.passed:
                    failed.append(result.command)
    except SessionError as err:
        logger.error("%s", err)  # noqa: TRY400
        raise typer.Exit(EXIT_USAGE) from None
    except (AlgebraError, ComplexError, ResolutionError, FunctorError) as err:
        logger.error("%s: %s", type(err).__name__, err)  # noqa: TRY400
        raise typer.Exit(EXIT_FAILED) from None
    except ComputationTimeoutError as err:
        logger.error("%s", err)  # noqa: TRY400
        raise typer.Exit(EXIT_FAILED) from None

    logger.info("Ran %d commands, %d failed", count, len(failed))
    if failed:
        logger.error("Failed verifications: %s", "; ".join(failed))
        raise typer.Exit(EXIT_FAILED)


def _echo(result: CommandResult, *, machine: bool) -> None:
    if machine:
        typer.echo(f"[{result.command}]")
        for key, value in result.machine.items():
            typer.echo(f"{key} = {value}")

        return

    typer.echo(f">>> {result.command}")
    for line in result.lines:
        typer.echo(line)
