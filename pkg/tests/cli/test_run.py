from __future__ import annotations

from typing import TYPE_CHECKING, Any

import pytest
from typer.testing import CliRunner

from tac_approx.cli.main import app
from tac_approx.utils.timeout import ComputationTimeoutError

from ._helpers import SESSION, normalize_console_output, write_session

if TYPE_CHECKING:
    from pathlib import Path

    from pytest_snapshot.plugin import Snapshot

runner = CliRunner()

pytestmark = [
    pytest.mark.unit,
]


def test_report(snapshot: Snapshot, tmp_path: Path) -> None:
    # Arrange
    session_file = write_session(tmp_path)

    # Act
    result = runner.invoke(app, ["--quiet", "run", str(session_file)])

    # Assert
    assert result.exit_code == 0
    snapshot.assert_match(normalize_console_output(result.stdout), "stdout.txt")


def test_machine(tmp_path: Path) -> None:
    # Arrange
    session_file = write_session(tmp_path)

    # Act
    result = runner.invoke(app, ["--quiet", "run", str(session_file), "--machine", "--command", "check"])

    # Assert
    assert result.exit_code == 0
    assert normalize_console_output(result.stdout).splitlines() == [
        "[check C2 --window -2 2]",
        "command = check",
        "passed = yes",
        "valid = yes",
        "acyclic = yes",
    ]


def test_command_filter(tmp_path: Path) -> None:
    # Arrange
    session_file = write_session(tmp_path)

    # Act
    result = runner.invoke(app, ["--quiet", "run", str(session_file), "--command", "homotopic"])

    # Assert
    assert result.exit_code == 0
    assert normalize_console_output(result.stdout) == ">>> homotopic one one\nhomotopic, witness 0"


def test_standard_input() -> None:
    # Act
    result = runner.invoke(app, ["--quiet", "run", "-", "--command", "homotopic"], input=SESSION)

    # Assert
    assert result.exit_code == 0
    assert "homotopic, witness 0" in result.stdout


def test_failed_verification(tmp_path: Path) -> None:
    # Arrange
    session_file = write_session(tmp_path, SESSION + "run homotopic one nothing\n")

    # Act
    result = runner.invoke(app, ["--quiet", "run", str(session_file)])

    # Assert
    assert result.exit_code == 1
    assert ">>> homotopic one nothing" in result.stdout
    assert "not homotopic in degree" in result.stdout


def test_syntax_error(tmp_path: Path) -> None:
    # Arrange
    session_file = write_session(tmp_path, "field 32003\nring Q = poly x\nfoo\n")

    # Act
    result = runner.invoke(app, ["--quiet", "run", str(session_file)])

    # Assert
    assert result.exit_code == 2
    assert result.stdout == ""


def test_undefined_name(tmp_path: Path) -> None:
    # Arrange
    session_file = write_session(tmp_path, SESSION + "run check C9\n")

    # Act
    result = runner.invoke(app, ["--quiet", "run", str(session_file)])

    # Assert
    assert result.exit_code == 2


@pytest.mark.parametrize(
    "options",
    [
        ["--command", "frobnicate"],
        ["--window", "2", "-2"],
        ["--max-length", "-1"],
    ],
)
def test_usage_errors(tmp_path: Path, options: list[str]) -> None:
    # Arrange
    session_file = write_session(tmp_path)

    # Act
    result = runner.invoke(app, ["--quiet", "run", str(session_file), *options])

    # Assert
    assert result.exit_code == 2
    assert result.stdout == ""


def test_timeout(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    # Arrange
    def _timed_out(*args: Any, **kwargs: Any) -> Any:  # noqa: ARG001
        msg = "Computation did not finish within 1 seconds"
        raise ComputationTimeoutError(msg)

    monkeypatch.setattr("tac_approx.cli.run.run_session", _timed_out)
    session_file = write_session(tmp_path)

    # Act
    result = runner.invoke(app, ["--quiet", "run", str(session_file), "--timeout-seconds", "1"])

    # Assert
    assert result.exit_code == 1
