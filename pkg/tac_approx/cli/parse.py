from __future__ import annotations

import logging

import typer

from tac_approx.session import SessionError, Workspace, parse_session, render_session
from tac_approx.settings import Settings

from .app import app
from .run import EXIT_USAGE

logger = logging.getLogger(__name__)


@app.command()
def parse(
    session_file: typer.FileText = typer.Argument(
        ...,
        help="Session file to check; `-` reads standard input.",
        show_default=False,
    ),
) -> None:
    """Check the declarations of a session file and print it back in canonical form.

    Commands are not run. Declarations that use the result of a command are skipped.
    """
    try:
        session = parse_session(session_file.read())
        workspace = Workspace.from_session(session, Settings.from_session(session))
    except SessionError as err:
        logger.error("%s", err)  # noqa: TRY400
        raise typer.Exit(EXIT_USAGE) from None

    if workspace.deferred:
        logger.info("Not checked, they depend on commands: %s", ", ".join(sorted(workspace.deferred)))

    typer.echo(render_session(session))
