from __future__ import annotations

import pytest

from tac_approx.algebra import FreeMap, QuotientRing
from tac_approx.complexes import ChainComplex, ChainMap, Periodicity, base_change, dualize, shift
from tac_approx.settings import Settings


@pytest.fixture
def set_terminal_width() -> int:
    """Set console width."""
    return 200


@pytest.fixture(autouse=True)
def patch_terminal_width(monkeypatch: pytest.MonkeyPatch, set_terminal_width: int) -> None:
    """Patch the console width."""
    monkeypatch.setenv("COLUMNS", str(set_terminal_width))


# Settings
# ----------------------------------------------------------------------------
@pytest.fixture
def settings() -> Settings:
    """Default settings with a short resolution guard."""
    return Settings(max_resolution_length=12)


# Rings
# ----------------------------------------------------------------------------
@pytest.fixture
def hypersurface() -> QuotientRing:
    """Hypersurface `k[x,y]/(x^2)`."""
    return QuotientRing(["x", "y"], ["x^2"], name="Q")


@pytest.fixture
def artinian(hypersurface: QuotientRing) -> QuotientRing:
    """Artinian complete intersection `k[x,y]/(x^2,y^2)` presented over the hypersurface."""
    return hypersurface.quotient(["y^2"], name="R")


@pytest.fixture
def tower() -> tuple[QuotientRing, QuotientRing, QuotientRing]:
    """Rings `k[x,y,z]/(x^2) -> k[x,y,z]/(x^2,y^2) -> k[x,y,z]/(x^2,y^2,z^2)`."""
    bottom = QuotientRing(["x", "y", "z"], ["x^2"], name="Q")
    middle = bottom.quotient(["y^2"], name="R1")
    top = middle.quotient(["z^2"], name="R")
    return bottom, middle, top


# Worked example complexes over `k[x,y]/(x^2,y^2)`
# ----------------------------------------------------------------------------
@pytest.fixture
def residue_field_complex(artinian: QuotientRing) -> ChainComplex:
    """Totally acyclic complex with `Im d_0 = (xy)`, the residue field, on the window `[-4, 4]`."""

    def m(rows: list[list[str]]) -> FreeMap:
        return FreeMap(artinian, rows)

    d2 = m([["x", "0", "-y"], ["0", "y", "x"]])
    d3 = m([["x", "y", "0", "0"], ["0", "0", "x", "y"], ["0", "x", "-y", "0"]])
    d4 = m(
        [
            ["x", "-y", "0", "0", "0"],
            ["0", "x", "y", "0", "0"],
            ["0", "0", "x", "-y", "0"],
            ["0", "0", "0", "x", "y"],
        ]
    )
    differentials = {
        4: d4,
        3: d3,
        2: d2,
        1: m([["x", "y"]]),
        0: m([["x*y"]]),
        -1: m([["x"], ["y"]]),
        -2: d2.transpose(),
        -3: d3.transpose(),
    }
    return ChainComplex(artinian, (-4, 4), differentials, name="C")


@pytest.fixture
def y_complex(artinian: QuotientRing) -> ChainComplex:
    """Periodic complex `... -> R --y--> R --y--> R -> ...`."""
    differentials = {n: FreeMap(artinian, [["y"]]) for n in range(-1, 3)}
    return ChainComplex(artinian, (-2, 2), differentials, periodicity=Periodicity(1), name="C")


@pytest.fixture
def x_complex(artinian: QuotientRing) -> ChainComplex:
    """Periodic complex `... -> R --x--> R --x--> R -> ...`."""
    differentials = {n: FreeMap(artinian, [["x"]]) for n in range(-1, 3)}
    return ChainComplex(artinian, (-2, 2), differentials, periodicity=Periodicity(1), name="C")


@pytest.fixture
def residue_field_dual(residue_field_complex: ChainComplex) -> ChainComplex:
    """The complex `Σ^-1 C*`, which is isomorphic to the residue field complex."""
    return shift(dualize(residue_field_complex), -1)


@pytest.fixture
def alternating_resolution(hypersurface: QuotientRing) -> ChainComplex:
    """Complete resolution of the residue field over `k[x,y]/(x^2)` with alternating differentials."""
    even = FreeMap(hypersurface, [["x", "-y"], ["0", "x"]])
    odd = FreeMap(hypersurface, [["x", "y"], ["0", "x"]])
    differentials = {n: even if n % 2 == 0 else odd for n in range(-3, 5)}
    return ChainComplex(hypersurface, (-4, 4), differentials, periodicity=Periodicity(2), name="F")


@pytest.fixture
def residue_field_counit(
    artinian: QuotientRing,
    alternating_resolution: ChainComplex,
    residue_field_complex: ChainComplex,
) -> ChainMap:
    """Right approximation of the residue field complex out of the reduction of `alternating_resolution`."""

    def m(rows: list[list[str]]) -> FreeMap:
        return FreeMap(artinian, rows)

    components = {
        4: m([["1", "0"], ["0", "1"], ["0", "0"], ["0", "0"], ["0", "0"]]),
        3: m([["1", "0"], ["0", "1"], ["0", "0"], ["0", "0"]]),
        2: m([["1", "0"], ["0", "0"], ["0", "1"]]),
        1: m([["1", "0"], ["0", "1"]]),
        0: m([["1", "0"]]),
        -1: m([["y", "0"]]),
        -2: m([["y", "0"], ["0", "0"]]),
        -3: m([["y", "0"], ["0", "0"], ["0", "0"]]),
        -4: m([["y", "0"], ["0", "0"], ["0", "0"], ["0", "0"]]),
    }
    source = base_change(alternating_resolution, artinian)
    return ChainMap(source, residue_field_complex, components, name="epsilon")
