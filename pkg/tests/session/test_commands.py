from __future__ import annotations

from pathlib import Path

import pytest

from tac_approx.complexes import ChainComplex
from tac_approx.session import (
    COMMANDS,
    CommandResult,
    CommandStatement,
    SessionSemanticError,
    Workspace,
    parse_session,
    run_command,
    run_session,
)
from tac_approx.settings import Settings

pytestmark = [
    pytest.mark.unit,
]

SESSIONS = Path(__file__).parent / "sessions"

DECLARATIONS = """\
ring Q = poly x,y | ideal x^2
ring R = Q | extra y^2
complex C2 over R = window -2..2 { deg -1: [[y]], deg 0: [[y]], deg 1: [[y]], deg 2: [[y]] } period 1
complex C3 over R = window -2..2 { deg -1: [[x]], deg 0: [[x]], deg 1: [[x]], deg 2: [[x]] } period 1
complex D3 over R = window -2..2 {
    deg -1: [[x, 0], [0, x]], deg 0: [[x, 0], [0, x]], deg 1: [[x, 0], [0, x]], deg 2: [[x, 0], [0, x]]
} period 1
map one: C2 -> C2 = window -2..2 {
    deg -2: [[1]], deg -1: [[1]], deg 0: [[1]], deg 1: [[1]], deg 2: [[1]]
} period 1
map nothing: C2 -> C2 = window -2..2 { } period 1
map eps3: D3 -> C3 = window -3..3 {
    deg -3: [[1, 0]], deg -2: [[1, 0]], deg -1: [[1, 0]], deg 0: [[1, 0]],
    deg 1: [[1, 0]], deg 2: [[1, 0]], deg 3: [[1, 0]]
}
map f3: D3 -> D3 = window -2..2 {
    deg -2: [[1, 0], [0, 0]], deg -1: [[1, 0], [0, 0]], deg 0: [[1, 0], [0, 0]],
    deg 1: [[1, 0], [0, 0]], deg 2: [[1, 0], [0, 0]]
} period 1
"""


def _results(commands: str, settings: Settings) -> list[CommandResult]:
    return list(run_session(parse_session(DECLARATIONS + commands), settings))


class Test_run_command:
    def test_check(self, settings: Settings) -> None:
        # Arrange & Act
        (result,) = _results("run check C2", settings)

        # Assert
        assert result.passed
        assert result.lines[0] == "C2: differentials compose to zero"
        assert result.machine == {"command": "check", "passed": "yes", "valid": "yes", "acyclic": "yes"}

    def test_homotopic_to_itself(self, settings: Settings) -> None:
        # Arrange & Act
        (result,) = _results("run homotopic one one", settings)

        # Assert
        assert result.passed
        assert result.lines == ["homotopic, witness 0"]

    def test_identity_is_not_null_homotopic(self, settings: Settings) -> None:
        # Arrange & Act
        (result,) = _results("run homotopic one nothing", settings)

        # Assert
        assert not result.passed
        assert result.lines[0].startswith("not homotopic in degree")
        assert result.machine["homotopic"] == "no"

    def test_approx_right_of_finite_projective_dimension(self, settings: Settings) -> None:
        # Arrange & Act
        (result,) = _results("run approx-right C2", settings)

        # Assert
        assert result.passed
        assert result.lines[0] == "source is the zero complex; pd_Q(Im d0) = 1"
        assert result.machine["trivial"] == "yes"

    def test_minimality_witness(self, settings: Settings) -> None:
        # Arrange & Act
        (result,) = _results("run minimality eps3 f3", settings)

        # Assert
        assert result.lines == [
            "not right minimal: f fixes the approximation and is not invertible in degree -2",
        ]
        assert result.machine["witness"] == "yes"

    def test_default_depth(self, settings: Settings) -> None:
        # Arrange & Act
        (result,) = _results("run triangle-res C2", settings)

        # Assert
        assert result.passed
        assert result.machine["depth"] == "1"
        assert [line.split(":")[0] for line in result.lines[:2]] == ["B0", "B1"]

    def test_depth_must_be_an_integer(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(SessionSemanticError, match="--depth of triangle-res must be an integer, got 'two'"):
            _results("run triangle-res C2 --depth two", settings)

    def test_binds_result(self, settings: Settings) -> None:
        # Arrange
        workspace = Workspace.from_session(parse_session(DECLARATIONS), settings)
        statement = CommandStatement(command="dual", arguments=("C2",), bind="D2", line=20)

        # Act
        result = run_command(workspace, statement)

        # Assert
        assert isinstance(workspace.complex("D2"), ChainComplex)
        assert workspace.complex("D2") is result.value
        assert result.machine["name"] == "D2"

    def test_bound_result_is_usable(self, settings: Settings) -> None:
        # Arrange & Act
        results = _results("run dual C2 as D2\nrun check D2\n", settings)

        # Assert
        assert [r.command for r in results] == ["dual C2 as D2", "check D2"]
        assert all(r.passed for r in results)

    def test_unknown_command(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(SessionSemanticError, match="Unknown command 'frobnicate'"):
            _results("run frobnicate C2", settings)

    def test_unknown_option(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(SessionSemanticError, match="Unknown option --depth for check; options: --window"):
            _results("run check C2 --depth 2", settings)

    def test_wrong_argument_count(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(SessionSemanticError, match="check takes 1 arguments, got 2"):
            _results("run check C2 C3", settings)

    def test_nothing_to_bind(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(SessionSemanticError, match="check has no result to bind to 'X'"):
            _results("run check C2 as X", settings)

    def test_every_command_has_a_summary(self) -> None:
        # Assert
        assert all(entry.summary for entry in COMMANDS.values())
        assert {"check", "counit", "approx-right", "minimality", "triangle-res"} <= set(COMMANDS)


class Test_run_session:
    def test_command_filter(self, settings: Settings) -> None:
        # Arrange
        session = parse_session(DECLARATIONS + "run dual C2 as D2\nrun check C2\n")

        # Act
        results = list(run_session(session, settings, commands=["check"]))

        # Assert
        assert [r.command for r in results] == ["check C2"]

    def test_field_of_the_session(self) -> None:
        # Arrange
        session = parse_session("field 7\n" + DECLARATIONS + "run check C2\n")

        # Act
        (result,) = run_session(session)

        # Assert
        assert result.passed

    @pytest.mark.integration
    def test_worked_examples(self, settings: Settings) -> None:
        # Arrange
        session = parse_session((SESSIONS / "worked_examples.tac").read_text())

        # Act
        results = list(run_session(session, settings))

        # Assert
        assert [r.command for r in results] == [
            "check C1",
            "resolve k --length 4 as F",
            "approx-right C2",
            "minimality eps3 f3",
            "counit C1 as eps1",
            "homotopic eps1 eps1",
        ]
        assert all(r.passed for r in results)
