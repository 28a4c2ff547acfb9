from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

from tac_approx.algebra import FreeMap

from .complex import ChainComplex, Periodicity, Window, wrap_object
from .errors import ShapeMismatchError, WindowMismatchError

if TYPE_CHECKING:
    from collections.abc import Callable, ItemsView

    from tac_approx.algebra import QuotientRing

logger = logging.getLogger(__name__)


class ChainMap:
    """Morphism of complexes given degreewise by `f_n: S_n -> T_n` on a window.

    Components outside the window are zero unless a periodicity record extends them with the same
    wrapping as the modules of a periodic complex.
    """

    def __init__(  # noqa: PLR0913
        self,
        source: ChainComplex,
        target: ChainComplex,
        components: Mapping[int, FreeMap],
        *,
        window: tuple[int, int] | None = None,
        periodicity: Optional[Periodicity] = None,
        name: Optional[str] = None,
    ) -> None:
        """Initialize a chain map.

        Args:
            source: Complex `S`.
            target: Complex `T`.
            components: Maps `f_n` keyed by degree; missing degrees inside the window are zero.
            window: Degrees stored explicitly; defaults to the intersection of the two windows.
            periodicity: Periodic extension of the components beyond the window.
            name: Optional display name.
        """
        self.source = source
        self.target = target
        self.window = Window(*window) if window is not None else source.window.intersect(target.window)
        self.periodicity = periodicity
        self.name = name
        if periodicity is not None and self.window.hi - self.window.lo < periodicity.period:
            msg = f"Window {self.window} is too short for period {periodicity.period}"
            raise WindowMismatchError(msg)

        self._components: dict[int, FreeMap] = {}
        for n in self.window.degrees():
            expected = (target.rank(n), source.rank(n))
            f = components.get(n) or FreeMap.zero(source.ring, *expected)
            if f.shape != expected:
                msg = f"Component in degree {n} has shape {f.shape}, expected {expected}"
                raise ShapeMismatchError(msg)

            self._components[n] = f

    @property
    def ring(self) -> QuotientRing:
        return self.source.ring

    def component(self, degree: int) -> FreeMap:
        wrapped = wrap_object(degree, self.window, self.periodicity)
        if wrapped is None:
            return FreeMap.zero(self.ring, self.target.rank(degree), self.source.rank(degree))

        return self._components[wrapped]

    def items(self) -> ItemsView[int, FreeMap]:
        return self._components.items()

    # Constructors
    # ------------------------------------------------------------------------
    @classmethod
    def identity(cls, complex_: ChainComplex) -> ChainMap:
        return cls(
            complex_,
            complex_,
            {n: FreeMap.identity(complex_.ring, complex_.rank(n)) for n in complex_.window.degrees()},
            periodicity=complex_.periodicity,
        )

    @classmethod
    def zero(cls, source: ChainComplex, target: ChainComplex) -> ChainMap:
        return cls(source, target, {})

    @classmethod
    def from_function(
        cls,
        source: ChainComplex,
        target: ChainComplex,
        component: Callable[[int], FreeMap],
        *,
        window: tuple[int, int],
    ) -> ChainMap:
        return cls(source, target, {n: component(n) for n in Window(*window).degrees()}, window=window)

    # Checks
    # ------------------------------------------------------------------------
    def failing_degree(self, window: tuple[int, int] | None = None) -> int | None:
        """First degree `n` with `d^T_n f_n != f_{n-1} d^S_n`, or `None` if the map commutes on the window."""
        lo, hi = window or self.window
        for n in range(lo + 1, hi + 1):
            left = self.target.differential(n) @ self.component(n)
            right = self.component(n - 1) @ self.source.differential(n)
            if left != right:
                logger.debug("Chain map fails to commute in degree %d", n)
                return n

        return None

    def is_chain_map(self, window: tuple[int, int] | None = None) -> bool:
        return self.failing_degree(window) is None

    def is_identity(self) -> bool:
        return all(f == FreeMap.identity(self.ring, f.source_rank) for f in self._components.values())

    def is_isomorphism(self, window: tuple[int, int] | None = None) -> bool:
        """Whether every component on the window is invertible."""
        return all(self.component(n).is_invertible() for n in Window(*(window or self.window)).degrees())

    # Arithmetic
    # ------------------------------------------------------------------------
    def common_support(self, other: ChainMap) -> tuple[Window, Optional[Periodicity]]:
        """Window and periodicity of a combination of two maps.

        A periodic operand takes the window of a non-periodic one; maps with the same periodicity keep it
        on the hull of their windows.
        """
        if self.periodicity is not None and self.periodicity == other.periodicity:
            return Window(min(self.window.lo, other.window.lo), max(self.window.hi, other.window.hi)), self.periodicity

        if self.periodicity is not None and other.periodicity is None:
            return other.window, None

        if self.periodicity is None and other.periodicity is not None:
            return self.window, None

        return self.window.intersect(other.window), None

    def _combine(self, other: ChainMap, combine: Callable[[FreeMap, FreeMap], FreeMap]) -> ChainMap:
        window, periodicity = self.common_support(other)
        return ChainMap(
            self.source,
            self.target,
            {n: combine(self.component(n), other.component(n)) for n in window.degrees()},
            window=window,
            periodicity=periodicity,
        )

    def __add__(self, other: ChainMap) -> ChainMap:
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: ChainMap) -> ChainMap:
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self) -> ChainMap:
        return ChainMap(
            self.source,
            self.target,
            {n: -f for n, f in self._components.items()},
            window=self.window,
            periodicity=self.periodicity,
        )

    def __matmul__(self, other: ChainMap) -> ChainMap:
        """Composition `self ∘ other`."""
        window, periodicity = self.common_support(other)
        if other.target.ranks(window) != self.source.ranks(window):
            msg = "Target of the right factor is not the source of the left factor"
            raise ShapeMismatchError(msg)

        return ChainMap(
            other.source,
            self.target,
            {n: self.component(n) @ other.component(n) for n in window.degrees()},
            window=window,
            periodicity=periodicity,
        )

    def restrict(self, window: tuple[int, int]) -> ChainMap:
        new = Window(*window)
        return ChainMap(
            self.source.restrict(new),
            self.target.restrict(new),
            {n: self.component(n) for n in new.degrees()},
            window=new,
            name=self.name,
        )

    def agrees_with(self, other: ChainMap, window: tuple[int, int]) -> bool:
        return all(self.component(n) == other.component(n) for n in Window(*window).degrees())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented

        return self.window == other.window and self._components == other._components

    def __hash__(self) -> int:
        return hash((self.window, tuple(self._components.values())))

    def __repr__(self) -> str:
        label = self.name or "ChainMap"
        return f"{label}(window={self.window}, shapes={ {n: f.shape for n, f in self._components.items()} })"


@dataclass(frozen=True)
class NotHomotopic:
    """Failure to find a homotopy, with the degree where solving broke down."""

    degree: int
    reason: str

    def __bool__(self) -> bool:
        return False


class Homotopy:
    """Degree one maps `s_n: S_n -> T_{n+1}`."""

    def __init__(
        self,
        source: ChainComplex,
        target: ChainComplex,
        components: Mapping[int, FreeMap],
        *,
        window: tuple[int, int],
    ) -> None:
        self.source = source
        self.target = target
        self.window = Window(*window)
        self._components: dict[int, FreeMap] = {}
        for n in self.window.degrees():
            expected = (target.rank(n + 1), source.rank(n))
            s = components.get(n) or FreeMap.zero(source.ring, *expected)
            if s.shape != expected:
                msg = f"Homotopy component in degree {n} has shape {s.shape}, expected {expected}"
                raise ShapeMismatchError(msg)

            self._components[n] = s

    def component(self, degree: int) -> FreeMap:
        if degree in self.window:
            return self._components[degree]

        return FreeMap.zero(self.source.ring, self.target.rank(degree + 1), self.source.rank(degree))

    def boundary(self, degree: int) -> FreeMap:
        """The map `d^T_{n+1} s_n + s_{n-1} d^S_n` in degree `n`."""
        return (
            self.target.differential(degree + 1) @ self.component(degree)
            + self.component(degree - 1) @ self.source.differential(degree)
        )

    def verify(self, f: ChainMap, g: ChainMap, window: tuple[int, int] | None = None) -> NotHomotopic | None:
        """Check `f_n - g_n = d s_n + s_{n-1} d` on the window.

        Returns:
            `None` if the identity holds everywhere, otherwise the first failing degree.
        """
        lo, hi = window or self.window.shrink()
        for n in range(lo, hi + 1):
            if f.component(n) - g.component(n) != self.boundary(n):
                return NotHomotopic(n, "homotopy identity fails")

        return None

    def __add__(self, other: Homotopy) -> Homotopy:
        window = self.window.intersect(other.window)
        return Homotopy(
            self.source,
            self.target,
            {n: self.component(n) + other.component(n) for n in window.degrees()},
            window=window,
        )

    def __repr__(self) -> str:
        return f"Homotopy(window={self.window})"
