from __future__ import annotations

import pytest

from tac_approx.algebra import FreeMap, ModulePresentation, QuotientRing, UnsupportedRingError
from tac_approx.complexes import ChainComplex, total_acyclicity_check
from tac_approx.resolution import (
    Equivalence,
    ResolutionPath,
    complete_resolution,
    find_equivalence,
    mcm_syzygy,
)
from tac_approx.settings import Settings

pytestmark = [
    pytest.mark.unit,
]


@pytest.fixture
def line() -> QuotientRing:
    """Hypersurface `k[x]/(x^2)`."""
    return QuotientRing(["x"], ["x^2"], name="Q")


class Test_complete_resolution:
    def test_periodic_route(self, line: QuotientRing, settings: Settings) -> None:
        # Arrange
        module = ModulePresentation(FreeMap(line, [["x"]]))

        # Act
        result = complete_resolution(module, settings)

        # Assert
        assert result.path is ResolutionPath.PERIODIC
        assert result.tail is not None
        assert result.tail.period == 1
        assert result.complex.ranks((-4, 4)) == {n: 1 for n in range(-4, 5)}
        assert total_acyclicity_check(result.complex, (-4, 4))
        assert result.comparison.is_chain_map()
        assert all(result.comparison.component(n).is_invertible() for n in range(result.agreement_degree, 6))

    def test_splice_route(self, line: QuotientRing, settings: Settings) -> None:
        # Arrange
        module = ModulePresentation(FreeMap(line, [["x"]]))

        # Act
        result = complete_resolution(module, settings, window=(-4, 4), path=ResolutionPath.SPLICE)

        # Assert
        assert result.path is ResolutionPath.SPLICE
        assert result.agreement_degree == 2
        assert result.complex.ranks() == {n: 1 for n in range(-4, 5)}
        assert total_acyclicity_check(result.complex)
        assert result.comparison.is_chain_map()

    def test_routes_are_equivalent(self, line: QuotientRing, settings: Settings) -> None:
        # Arrange
        module = ModulePresentation(FreeMap(line, [["x"]]))
        periodic = complete_resolution(module, settings)
        spliced = complete_resolution(module, settings, window=(-4, 4), path=ResolutionPath.SPLICE)

        # Act
        equivalence = find_equivalence(periodic.complex, spliced.complex, window=(-3, 3), settings=settings)

        # Assert
        assert isinstance(equivalence, Equivalence)

    def test_finite_projective_dimension(self, settings: Settings) -> None:
        # Arrange
        ring = QuotientRing(["x", "y"])
        module = ModulePresentation(FreeMap(ring, [["x", "y"]]))

        # Act
        result = complete_resolution(module, settings)

        # Assert
        assert result.path is ResolutionPath.FINITE
        assert result.projective_dimension == 2
        assert result.complex.is_zero()

    def test_unsupported_ring(self, settings: Settings) -> None:
        # Arrange
        ring = QuotientRing(["x", "y"], ["x^2", "x*y"])
        module = ModulePresentation(FreeMap(ring, [["x", "y"]]))

        # Act & Assert
        with pytest.raises(UnsupportedRingError):
            complete_resolution(module, settings)

    @pytest.mark.integration
    def test_residue_field_over_hypersurface(self, hypersurface: QuotientRing, settings: Settings) -> None:
        # Arrange
        module = ModulePresentation(FreeMap(hypersurface, [["x", "y"]]))

        # Act
        result = complete_resolution(module, settings)

        # Assert
        assert result.tail is not None
        assert result.tail.period <= 2
        assert total_acyclicity_check(result.complex, (-6, 6))
        assert result.comparison.is_chain_map()

    @pytest.mark.integration
    def test_residue_field_over_artinian(
        self,
        artinian: QuotientRing,
        residue_field_complex: ChainComplex,
        settings: Settings,
    ) -> None:
        # Arrange
        module = ModulePresentation(FreeMap(artinian, [["x", "y"]]))

        # Act
        result = complete_resolution(module, settings, window=(-3, 4))

        # Assert
        assert result.path is ResolutionPath.SPLICE
        assert result.complex.ranks((-3, 4)) == residue_field_complex.ranks((-3, 4))
        assert total_acyclicity_check(result.complex, (-3, 4))
        assert result.comparison.is_chain_map()


class Test_mcm_syzygy:
    def test_free_module_has_zero_syzygy(self, hypersurface: QuotientRing) -> None:
        # Arrange & Act
        syzygy = mcm_syzygy(ModulePresentation.free(hypersurface, 1))

        # Assert
        assert syzygy.shift == 3
        assert syzygy.module.generator_rank == 0

    def test_residue_field(self, line: QuotientRing) -> None:
        # Arrange & Act
        syzygy = mcm_syzygy(ModulePresentation(FreeMap(line, [["x"]])))

        # Assert
        assert syzygy.shift == 2
        assert syzygy.module.relations.shape == (1, 1)
        assert not syzygy.module.is_zero()
