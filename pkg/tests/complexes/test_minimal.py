from __future__ import annotations

import pytest

from tac_approx.complexes import ChainComplex, ChainMap, cone, minimal_model

pytestmark = [
    pytest.mark.unit,
]


class Test_minimal_model:
    def test_already_minimal(self, x_complex: ChainComplex) -> None:
        # Arrange & Act
        model = minimal_model(x_complex)

        # Assert
        assert model.complex.ranks() == x_complex.ranks()
        assert model.inclusion.is_identity()
        assert model.projection.is_identity()

    def test_cone_of_identity(self, x_complex: ChainComplex) -> None:
        # Arrange
        contractible = cone(ChainMap.identity(x_complex))

        # Act
        model = minimal_model(contractible)

        # Assert
        assert model.complex.ranks() == {-1: 1, 0: 0, 1: 0, 2: 1}
        assert model.complex.is_minimal()
        assert (model.projection @ model.inclusion).is_identity()
        assert model.inclusion.is_chain_map()
        assert model.projection.is_chain_map()
        identity = ChainMap.identity(model.original)
        assert model.homotopy.verify(identity, model.inclusion @ model.projection, window=(-1, 2)) is None
