from __future__ import annotations

import pytest

from tac_approx.algebra import FreeMap, QuotientRing
from tac_approx.complexes import ChainComplex, ChainMap, Periodicity
from tac_approx.functors import (
    Adjunction,
    CheckReport,
    compose_functors_check,
    functoriality_check,
    naturality_check,
    shift_compatibility,
    triangle_identities,
)
from tac_approx.settings import Settings

pytestmark = [
    pytest.mark.unit,
]


@pytest.fixture
def small_settings() -> Settings:
    return Settings(max_resolution_length=10, default_window=(-4, 4))


@pytest.fixture
def adjunction(hypersurface: QuotientRing, artinian: QuotientRing, small_settings: Settings) -> Adjunction:
    return Adjunction(hypersurface, artinian, small_settings)


def _scalar(complex_: ChainComplex, entry: str) -> ChainMap:
    m = FreeMap(complex_.ring, [[entry]])
    return ChainMap(complex_, complex_, {n: m for n in complex_.window.degrees()}, periodicity=Periodicity(1))


class Test_CheckReport:
    def test_describe(self) -> None:
        # Arrange
        passed = CheckReport("unit naturality", passed=True)
        failed = CheckReport("T preserves composition", passed=False, detail="no homotopy", degree=2)

        # Act & Assert
        assert passed
        assert not failed
        assert passed.describe() == "unit naturality: holds"
        assert failed.describe() == "T preserves composition: fails (degree 2); no homotopy"


class Test_functoriality_check:
    def test_base_change_is_exact(self, adjunction: Adjunction, hypersurface: QuotientRing) -> None:
        # Arrange
        d = FreeMap(hypersurface, [["x"]])
        complex_ = ChainComplex(hypersurface, (-2, 2), {n: d for n in range(-1, 3)}, periodicity=Periodicity(1))
        f = _scalar(complex_, "y")
        g = _scalar(complex_, "x + y^2")

        # Act
        report = functoriality_check(adjunction, f, g)

        # Assert
        assert report
        assert report.name == "S preserves composition"

    @pytest.mark.integration
    def test_forgetful_up_to_homotopy(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange
        f = _scalar(x_complex, "1 + y")
        g = _scalar(x_complex, "y")

        # Act
        report = functoriality_check(adjunction, f, g)

        # Assert
        assert report, report.describe()


class Test_triangle_identities:
    @pytest.mark.integration
    def test_multiplication_by_x(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange
        base_complex = adjunction.apply_T(x_complex).complex

        # Act
        reports = triangle_identities(adjunction, x_complex, base_complex)

        # Assert
        assert all(reports), [r.describe() for r in reports]

    @pytest.mark.integration
    def test_residue_field_complex(self, adjunction: Adjunction, residue_field_complex: ChainComplex) -> None:
        # Arrange
        base_complex = adjunction.apply_T(residue_field_complex).complex

        # Act
        reports = triangle_identities(adjunction, residue_field_complex, base_complex)

        # Assert
        assert all(reports), [r.describe() for r in reports]


class Test_naturality_check:
    @pytest.mark.integration
    def test_counit(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange & Act
        report = naturality_check(adjunction, _scalar(x_complex, "y"))

        # Assert
        assert report, report.describe()
        assert report.name == "counit naturality"

    @pytest.mark.integration
    def test_unit(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange
        base_complex = adjunction.apply_T(x_complex).complex
        identity = ChainMap.identity(base_complex)

        # Act
        report = naturality_check(adjunction, identity)

        # Assert
        assert report, report.describe()
        assert report.name == "unit naturality"


class Test_shift_compatibility:
    @pytest.mark.integration
    def test_multiplication_by_x(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange & Act
        report = shift_compatibility(adjunction, x_complex)

        # Assert
        assert report, report.describe()


class Test_compose_functors_check:
    @pytest.mark.integration
    def test_trivial_middle_step(
        self,
        hypersurface: QuotientRing,
        artinian: QuotientRing,
        x_complex: ChainComplex,
        small_settings: Settings,
    ) -> None:
        # Arrange
        d = FreeMap(hypersurface, [["x"]])
        base_complex = ChainComplex(hypersurface, (-2, 2), {n: d for n in range(-1, 3)}, periodicity=Periodicity(1))
        tower = (hypersurface, hypersurface, artinian)

        # Act
        reports = compose_functors_check(tower, base_complex, x_complex, small_settings)

        # Assert
        assert [r.name for r in reports] == ["S of a composite", "T of a composite"]
        assert all(reports), [r.describe() for r in reports]

    @pytest.mark.integration
    def test_three_variable_tower(
        self,
        tower: tuple[QuotientRing, QuotientRing, QuotientRing],
        small_settings: Settings,
    ) -> None:
        # Arrange
        bottom, _, top = tower
        periodic = Periodicity(1)
        d = FreeMap(bottom, [["x"]])
        base_complex = ChainComplex(bottom, (-2, 2), {n: d for n in range(-1, 3)}, periodicity=periodic)
        complex_ = ChainComplex(top, (-2, 2), {n: FreeMap(top, [["x"]]) for n in range(-1, 3)}, periodicity=periodic)

        # Act
        reports = compose_functors_check(tower, base_complex, complex_, small_settings)

        # Assert
        assert [r.name for r in reports] == ["S of a composite", "T of a composite"]
        assert all(reports), [r.describe() for r in reports]
