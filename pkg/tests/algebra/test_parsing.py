from __future__ import annotations

import pytest

from tac_approx.algebra import Polynomial, PolynomialParseError, format_polynomial, parse_polynomial

pytestmark = [
    pytest.mark.unit,
]


class Test_parse_polynomial:
    def test_round_trip(self) -> None:
        # Arrange
        text = "x^2*y - 3*y + 1"

        # Act
        p = parse_polynomial(text, ["x", "y"], 32003)

        # Assert
        assert p.term_dict == {(2, 1): 1, (0, 1): 32000, (0, 0): 1}
        assert format_polynomial(p, ["x", "y"]) == text

    def test_rational_coefficient(self) -> None:
        # Arrange & Act
        p = parse_polynomial("x/2", ["x"], 7)

        # Assert
        assert p == Polynomial({(1,): 4}, nvars=1, modulus=7)
        assert format_polynomial(p, ["x"]) == "-3*x"

    def test_python_power_accepted(self) -> None:
        # Arrange & Act & Assert
        assert parse_polynomial("x**2", ["x", "y"], 101) == parse_polynomial("x^2", ["x", "y"], 101)

    @pytest.mark.parametrize(
        "text",
        [
            pytest.param("x + w", id="unknown-variable"),
            pytest.param("(x + y", id="unbalanced"),
            pytest.param("1/x", id="not-polynomial"),
            pytest.param("x; y", id="bad-character"),
            pytest.param("  ", id="empty"),
        ],
    )
    def test_malformed(self, text: str) -> None:
        # Arrange & Act & Assert
        with pytest.raises(PolynomialParseError):
            parse_polynomial(text, ["x", "y"], 101)

    def test_denominator_divisible_by_characteristic(self) -> None:
        # Arrange & Act & Assert
        with pytest.raises(PolynomialParseError, match="denominator"):
            parse_polynomial("x/7", ["x"], 7)


class Test_format_polynomial:
    def test_zero(self) -> None:
        # Arrange & Act & Assert
        assert format_polynomial(Polynomial.zero(nvars=2, modulus=5), ["x", "y"]) == "0"

    def test_leading_negative(self) -> None:
        # Arrange
        p = Polynomial({(0, 1): -1, (0, 0): 2}, nvars=2, modulus=101)

        # Act & Assert
        assert format_polynomial(p, ["x", "y"]) == "-y + 2"
