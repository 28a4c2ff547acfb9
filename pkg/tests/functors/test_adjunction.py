from __future__ import annotations

import pytest

from tac_approx.algebra import FreeMap, QuotientRing, RingMismatchError
from tac_approx.complexes import ChainComplex, ChainMap, Homotopy, Periodicity, total_acyclicity_check
from tac_approx.functors import (
    Adjunction,
    InfiniteProjectiveDimensionError,
    NotTotallyAcyclicError,
    TSIdentification,
)
from tac_approx.resolution import Equivalence, ResolutionPath, find_equivalence, find_homotopy
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


class Test_Adjunction:
    def test_resolution_of_quotient(self, adjunction: Adjunction, hypersurface: QuotientRing) -> None:
        # Arrange & Act & Assert
        assert adjunction.projective_dimension == 1
        assert adjunction.resolution.ranks() == {0: 1, 1: 1}
        assert adjunction.resolution.differential(1) == FreeMap(hypersurface, [["y^2"]])

    def test_not_a_quotient(self, hypersurface: QuotientRing, artinian: QuotientRing) -> None:
        # Arrange & Act & Assert
        with pytest.raises(RingMismatchError):
            Adjunction(artinian, hypersurface)

    def test_infinite_projective_dimension(self, hypersurface: QuotientRing, small_settings: Settings) -> None:
        # Arrange
        ring = hypersurface.quotient(["x"])

        # Act & Assert
        with pytest.raises(InfiniteProjectiveDimensionError):
            Adjunction(hypersurface, ring, small_settings)


class Test_apply_S:
    def test_zero_complex(self, adjunction: Adjunction, hypersurface: QuotientRing) -> None:
        # Arrange & Act
        result = adjunction.apply_S(ChainComplex.zero(hypersurface, (-2, 2)))

        # Assert
        assert result.is_zero()
        assert result.ring == adjunction.ring

    def test_reduces_entries(self, adjunction: Adjunction, hypersurface: QuotientRing, artinian: QuotientRing) -> None:
        # Arrange
        d = FreeMap(hypersurface, [["x"]])
        complex_ = ChainComplex(hypersurface, (-2, 2), {n: d for n in range(-1, 3)}, periodicity=Periodicity(1))

        # Act
        result = adjunction.apply_S(complex_)

        # Assert
        assert result.differential(0) == FreeMap(artinian, [["x"]])
        assert result.periodicity == Periodicity(1)

    def test_rejects_complex_with_homology(self, adjunction: Adjunction, hypersurface: QuotientRing) -> None:
        # Arrange
        truncation = ChainComplex(hypersurface, (-1, 1), {1: FreeMap(hypersurface, [["x", "y"]])}, ranks={-1: 0})

        # Act & Assert
        with pytest.raises(NotTotallyAcyclicError, match="degree 0"):
            adjunction.apply_S(truncation)

    def test_wrong_ring(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange & Act & Assert
        with pytest.raises(RingMismatchError):
            adjunction.apply_S(x_complex)


class Test_apply_T:
    def test_finite_projective_dimension_gives_zero(self, adjunction: Adjunction, y_complex: ChainComplex) -> None:
        # Arrange & Act
        image = adjunction.apply_T(y_complex)

        # Assert
        assert image.completion.path is ResolutionPath.FINITE
        assert image.complex.is_zero()

    def test_multiplication_by_x(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange & Act
        image = adjunction.apply_T(x_complex)

        # Assert
        assert image.completion.path is ResolutionPath.PERIODIC
        assert image.complex.ring == adjunction.base
        assert image.complex.ranks((-4, 4)) == dict.fromkeys(range(-4, 5), 2)
        assert total_acyclicity_check(image.complex, (-4, 4))

    def test_cached(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange & Act & Assert
        assert adjunction.apply_T(x_complex) is adjunction.apply_T(x_complex)


class Test_unit:
    def test_includes_first_summand(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange
        image = adjunction.apply_T(x_complex).complex

        # Act
        eta = adjunction.unit(image)

        # Assert
        assert eta.target.ranks((-4, 4)) == dict.fromkeys(range(-4, 5), 4)
        assert eta.is_chain_map((-4, 4))
        assert eta.component(0).submatrix(range(2), range(2)) == FreeMap.identity(adjunction.base, 2)
        assert eta.component(0).submatrix(range(2, 4), range(2)).is_zero()

    def test_zero_complex(self, adjunction: Adjunction, hypersurface: QuotientRing) -> None:
        # Arrange
        zero = ChainComplex.zero(hypersurface, (-2, 2))

        # Act
        eta = adjunction.unit(zero)

        # Assert
        assert all(eta.component(n).shape == (0, 0) for n in range(-2, 3))

    def test_unit_into_completion(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange
        image = adjunction.apply_T(x_complex).complex

        # Act
        eta = adjunction.unit_completion(image)

        # Assert
        assert eta.is_chain_map((-4, 4))


class Test_counit:
    def test_zero_for_finite_projective_dimension(self, adjunction: Adjunction, y_complex: ChainComplex) -> None:
        # Arrange & Act
        epsilon = adjunction.counit(y_complex)

        # Assert
        assert epsilon.source.is_zero()
        assert epsilon.target == y_complex

    def test_multiplication_by_x(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange & Act
        epsilon = adjunction.counit(x_complex)

        # Assert
        assert epsilon.window == (-4, 4)
        assert epsilon.source.ranks((-4, 4)) == dict.fromkeys(range(-4, 5), 2)
        assert epsilon.is_chain_map()

    @pytest.mark.integration
    def test_residue_field_complex(self, adjunction: Adjunction, residue_field_complex: ChainComplex) -> None:
        # Arrange & Act
        epsilon = adjunction.counit(residue_field_complex)

        # Assert
        assert epsilon.source.ranks((-4, 4)) == dict.fromkeys(range(-4, 5), 2)
        assert epsilon.is_chain_map()

    @pytest.mark.integration
    def test_matches_worked_example(
        self,
        adjunction: Adjunction,
        residue_field_complex: ChainComplex,
        alternating_resolution: ChainComplex,
        residue_field_counit: ChainMap,
        small_settings: Settings,
    ) -> None:
        # Arrange
        image = adjunction.apply_T(residue_field_complex).complex
        epsilon = adjunction.counit(residue_field_complex)

        # Act
        equivalence = find_equivalence(alternating_resolution, image, window=(-3, 3), settings=small_settings)
        identification = adjunction.apply_S_morphism(
            adjunction.adjunction_backward(residue_field_counit, alternating_resolution)
        )

        # Assert
        assert residue_field_counit.is_chain_map()
        assert isinstance(equivalence, Equivalence)
        assert identification.is_chain_map((-3, 3))
        assert identification.is_isomorphism((-3, 3))
        assert isinstance(find_homotopy(epsilon @ identification, residue_field_counit, (-3, 3)), Homotopy)


class Test_apply_T_morphism:
    def test_identity(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange
        image = adjunction.apply_T(x_complex).complex

        # Act
        result = adjunction.apply_T_morphism(ChainMap.identity(x_complex))

        # Assert
        assert result.is_chain_map()
        assert isinstance(find_homotopy(ChainMap.identity(image), result, (-3, 3)), Homotopy)

    def test_multiplication_killing_degree_zero_image(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange
        xy = FreeMap(x_complex.ring, [["x*y"]])
        f = ChainMap(x_complex, x_complex, {n: xy for n in range(-2, 3)}, periodicity=Periodicity(1))

        # Act
        result = adjunction.apply_T_morphism(f)

        # Assert
        zero = ChainMap.zero(result.source, result.target)
        assert isinstance(find_homotopy(result, zero, (-3, 3)), Homotopy)

    def test_zero_for_finite_projective_dimension(self, adjunction: Adjunction, y_complex: ChainComplex) -> None:
        # Arrange & Act
        result = adjunction.apply_T_morphism(ChainMap.identity(y_complex))

        # Assert
        assert result.source.is_zero()


class Test_adjunction_transport:
    @pytest.mark.integration
    def test_round_trip(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange
        image = adjunction.apply_T(x_complex).complex
        g = ChainMap.identity(image)

        # Act
        forward = adjunction.adjunction_forward(g, x_complex)
        backward = adjunction.adjunction_backward(forward, image)

        # Assert
        assert forward.is_chain_map((-4, 4))
        assert isinstance(find_homotopy(forward, adjunction.counit(x_complex), (-3, 3)), Homotopy)
        assert isinstance(find_homotopy(backward, g, (-3, 3)), Homotopy)


class Test_ts_identification:
    @pytest.mark.integration
    def test_tensor_with_resolution(self, adjunction: Adjunction, x_complex: ChainComplex) -> None:
        # Arrange
        image = adjunction.apply_T(x_complex).complex

        # Act
        result = adjunction.ts_identification(image)

        # Assert
        assert isinstance(result, TSIdentification)
        assert result.equivalence.forward.is_chain_map()
