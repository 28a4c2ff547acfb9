from .commands import COMMANDS, CommandResult, run_command, run_session
from .errors import SessionError, SessionSemanticError, SessionSyntaxError, UndefinedNameError
from .grammar import parse_matrix, parse_session
from .models import (
    CommandStatement,
    ComplexStatement,
    MapStatement,
    MatrixSpec,
    ModuleStatement,
    PeriodSpec,
    RingStatement,
    Session,
)
from .render import SessionRenderer, render_session, render_statement
from .workspace import Workspace

__all__ = (
    "COMMANDS",
    "CommandResult",
    "CommandStatement",
    "ComplexStatement",
    "MapStatement",
    "MatrixSpec",
    "ModuleStatement",
    "PeriodSpec",
    "RingStatement",
    "Session",
    "SessionError",
    "SessionRenderer",
    "SessionSemanticError",
    "SessionSyntaxError",
    "UndefinedNameError",
    "Workspace",
    "parse_matrix",
    "parse_session",
    "render_session",
    "render_statement",
    "run_command",
    "run_session",
)
