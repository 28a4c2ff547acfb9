from __future__ import annotations

from pathlib import Path

import pytest

from tac_approx.algebra import FreeMap, QuotientRing, RingClass
from tac_approx.complexes import ChainComplex, ChainMap, Periodicity
from tac_approx.session import (
    SessionRenderer,
    SessionSemanticError,
    UndefinedNameError,
    Workspace,
    parse_session,
    render_statement,
)
from tac_approx.settings import Settings

pytestmark = [
    pytest.mark.unit,
]

SESSIONS = Path(__file__).parent / "sessions"

RINGS = "ring Q = poly x,y | ideal x^2\nring R = Q | extra y^2\n"


def _workspace(text: str, settings: Settings) -> Workspace:
    return Workspace.from_session(parse_session(text), settings)


class Test_Workspace_from_session:
    def test_worked_examples(self, settings: Settings, artinian: QuotientRing) -> None:
        # Arrange
        session = parse_session((SESSIONS / "worked_examples.tac").read_text())

        # Act
        workspace = Workspace.from_session(session, settings)

        # Assert
        assert workspace.ring("Q").classification == RingClass.HYPERSURFACE
        assert workspace.ring("R") == artinian
        assert workspace.adjunction(artinian).projective_dimension == 1
        assert workspace.complex("C1").ranks() == {4: 5, 3: 4, 2: 3, 1: 2, 0: 1, -1: 1, -2: 2, -3: 3, -4: 4}
        assert workspace.map("eps3").is_chain_map()

    def test_matches_fixtures(self, settings: Settings, residue_field_complex: ChainComplex) -> None:
        # Arrange
        session = parse_session((SESSIONS / "worked_examples.tac").read_text())

        # Act
        workspace = Workspace.from_session(session, settings)

        # Assert
        assert workspace.complex("C1") == residue_field_complex

    def test_modulus_from_settings(self) -> None:
        # Arrange & Act
        workspace = _workspace("ring P = poly x", Settings(modulus=7))

        # Assert
        assert workspace.ring("P").modulus == 7  # noqa: PLR2004

    def test_zero_kernel(self, settings: Settings) -> None:
        # Arrange
        text = "ring Q = poly x,y | ideal x^2\nring R = Q | extra x^2\n"

        # Act & Assert
        with pytest.raises(SessionSemanticError, match="line 2: .*the two rings are equal"):
            _workspace(text, settings)

    def test_unit_ideal(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(SessionSemanticError, match="zero ring"):
            _workspace("ring P = poly x,y | ideal x*y - 1, x", settings)

    def test_undefined_name(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(UndefinedNameError, match="line 1: Undefined ring 'S'"):
            _workspace("module M over S = coker [[x]]", settings)

    def test_duplicate_name(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(SessionSemanticError, match="'Q' is already defined as a ring"):
            _workspace(RINGS + "module Q over R = coker [[x]]", settings)

    def test_wrong_kind(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(SessionSemanticError, match="'Q' is a ring, not a complex"):
            _workspace(RINGS + "map f: Q -> Q = { }", settings)

    def test_bad_polynomial(self, settings: Settings) -> None:
        # Act & Assert
        with pytest.raises(SessionSemanticError, match="line 3"):
            _workspace(RINGS + "module M over R = coker [[z]]", settings)

    def test_differentials_do_not_compose(self, settings: Settings) -> None:
        # Arrange
        text = RINGS + "complex C over R = window 0..2 { deg 1: [[x]], deg 2: [[1]] }"

        # Act & Assert
        with pytest.raises(SessionSemanticError, match="line 3: .*do not compose to zero at degree 2"):
            _workspace(text, settings)

    def test_not_a_chain_map(self, settings: Settings) -> None:
        # Arrange
        text = RINGS + (
            "complex C over R = window -2..2 { deg -1: [[y]], deg 0: [[y]], deg 1: [[y]], deg 2: [[y]] } period 1\n"
            "map g: C -> C = { deg 0: [[1]] }\n"
        )

        # Act & Assert
        with pytest.raises(SessionSemanticError, match="line 4: Map 'g' does not commute"):
            _workspace(text, settings)

    def test_skips_declarations_using_results(self, settings: Settings) -> None:
        # Arrange
        text = RINGS + (
            "complex C over R = window -2..2 { deg -1: [[y]], deg 0: [[y]], deg 1: [[y]], deg 2: [[y]] } period 1\n"
            "run dual C as D\n"
            "map g: D -> C = { }\n"
        )

        # Act
        workspace = _workspace(text, settings)

        # Assert
        assert "g" not in workspace.objects
        assert workspace.deferred == {"D", "g"}


class Test_Workspace_adjunction_over:
    def test_only_quotient(self, settings: Settings, hypersurface: QuotientRing, artinian: QuotientRing) -> None:
        # Arrange
        workspace = _workspace(RINGS, settings)

        # Act
        adjunction = workspace.adjunction_over(hypersurface)

        # Assert
        assert adjunction.ring == artinian

    def test_several_quotients(self, settings: Settings, hypersurface: QuotientRing) -> None:
        # Arrange
        workspace = _workspace(RINGS + "ring S = Q | extra y\n", settings)

        # Act & Assert
        with pytest.raises(SessionSemanticError, match="declared quotients: R, S"):
            workspace.adjunction_over(hypersurface)

        assert workspace.adjunction_over(hypersurface, "S").ring == workspace.ring("S")

    def test_not_a_quotient(self, settings: Settings, hypersurface: QuotientRing) -> None:
        # Arrange
        workspace = _workspace(RINGS, settings)

        # Act & Assert
        with pytest.raises(SessionSemanticError, match="was not declared as a quotient"):
            workspace.adjunction(hypersurface)


class Test_SessionRenderer:
    def test_complex_round_trip(self, settings: Settings, residue_field_complex: ChainComplex) -> None:
        # Arrange
        workspace = _workspace(RINGS, settings)
        renderer = SessionRenderer(workspace)

        # Act
        text = render_statement(renderer.complex_statement(residue_field_complex, "C"))
        reparsed = _workspace(RINGS + text, settings).complex("C")

        # Assert
        assert text.splitlines()[:2] == [
            "complex C over R = window -4..4 {",
            "    deg -3: [[x, 0, 0], [y, 0, x], [0, x, -y], [0, y, 0]],",
        ]
        assert reparsed == residue_field_complex

    def test_periodic_map_round_trip(self, settings: Settings, x_complex: ChainComplex) -> None:
        # Arrange
        workspace = _workspace(RINGS, settings)
        workspace.bind("C", x_complex)
        ring = x_complex.ring
        f = ChainMap(
            x_complex,
            x_complex,
            {n: FreeMap(ring, [["y"]]) for n in range(-2, 3)},
            periodicity=Periodicity(1),
        )

        renderer = SessionRenderer(workspace)

        # Act
        text = render_statement(renderer.map_statement(f, "f"))
        complex_text = render_statement(renderer.complex_statement(x_complex, "C"))
        reparsed = _workspace(f"{RINGS}{complex_text}\n{text}", settings)

        # Assert
        assert text == (
            "map f: C -> C = window -2..2 {\n"
            "    deg -2: [[y]],\n"
            "    deg -1: [[y]],\n"
            "    deg 0: [[y]],\n"
            "    deg 1: [[y]],\n"
            "    deg 2: [[y]]\n"
            "} period 1"
        )
        assert reparsed.map("f") == f

    def test_zero_complex(self, settings: Settings, artinian: QuotientRing) -> None:
        # Arrange
        workspace = _workspace(RINGS, settings)

        # Act
        text = SessionRenderer(workspace).render(ChainComplex.zero(artinian, (0, 0)), "Z")

        # Assert
        assert text == "complex Z over R = window 0..0 {\n    rank 0: 0\n}"

    def test_machine_block(self, settings: Settings, y_complex: ChainComplex) -> None:
        # Arrange
        workspace = _workspace(RINGS, settings)

        # Act
        data = SessionRenderer(workspace).machine(y_complex, "C")

        # Assert
        assert data == {
            "kind": "complex",
            "name": "C",
            "ring": "R",
            "window": "-2..2",
            "ranks": "1,1,1,1,1",
            "minimal": "yes",
            "period": "1",
        }
