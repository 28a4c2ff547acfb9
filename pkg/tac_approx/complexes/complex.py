from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple, Optional

from tac_approx.algebra import FreeMap, RankMismatchError

from .errors import InvalidComplexError, ShapeMismatchError, WindowMismatchError

if TYPE_CHECKING:
    from collections.abc import Iterator

    from tac_approx.algebra import ModulePresentation, QuotientRing

logger = logging.getLogger(__name__)


class Window(NamedTuple):
    """Closed interval of degrees `[lo, hi]`."""

    lo: int
    hi: int

    def __contains__(self, degree: object) -> bool:
        return isinstance(degree, int) and self.lo <= degree <= self.hi

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def intersect(self, other: tuple[int, int]) -> Window:
        window = Window(max(self.lo, other[0]), min(self.hi, other[1]))
        if window.lo > window.hi:
            msg = f"Windows {self} and {other} do not overlap"
            raise WindowMismatchError(msg)

        return window

    def shrink(self, by: int = 1) -> Window:
        """The window without `by` degrees at each end."""
        return Window(self.lo + by, self.hi - by)

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class Periodicity:
    """Periodic extension of a windowed complex beyond its window.

    With `below` set, `d_n = d_{n + period}` for all degrees at or below the window; with `above` set,
    `d_n = d_{n - period}` above it.
    """

    period: int
    below: bool = True
    above: bool = True

    def __post_init__(self) -> None:
        if self.period < 1:
            msg = f"Period must be positive; got {self.period}"
            raise ValueError(msg)

    def swapped(self) -> Periodicity:
        return Periodicity(self.period, below=self.above, above=self.below)

    def describe(self) -> str:
        sides = [side for side, on in (("below", self.below), ("above", self.above)) if on]
        return f"period {self.period} {' '.join(sides)}".strip()


def wrap_object(degree: int, window: Window, periodicity: Periodicity | None) -> int | None:
    """Degree inside the window whose module stands for `degree`, or `None` if it is zero."""
    if degree in window:
        return degree

    if periodicity is None:
        return None

    p = periodicity.period
    if degree < window.lo and periodicity.below:
        return window.lo + (degree - window.lo) % p

    if degree > window.hi and periodicity.above:
        return window.hi - (window.hi - degree) % p

    return None


def wrap_differential(degree: int, window: Window, periodicity: Periodicity | None) -> int | None:
    """Degree in `(lo, hi]` whose differential stands for `d_degree`, or `None` if it is zero."""
    if window.lo < degree <= window.hi:
        return degree

    if periodicity is None:
        return None

    p = periodicity.period
    if degree <= window.lo and periodicity.below:
        return window.lo + 1 + (degree - window.lo - 1) % p

    if degree > window.hi and periodicity.above:
        return window.hi - (window.hi - degree) % p

    return None


class ChainComplex:
    """Complex of finitely generated free modules, homologically graded, stored on a window.

    Differentials `d_n: C_n -> C_{n-1}` are stored for `n` in `(lo, hi]`. Outside the window the complex
    is zero unless a periodicity record extends it.
    """

    def __init__(  # noqa: PLR0913
        self,
        ring: QuotientRing,
        window: tuple[int, int],
        differentials: Mapping[int, FreeMap],
        *,
        ranks: Mapping[int, int] | None = None,
        periodicity: Optional[Periodicity] = None,
        augmentation: Optional[ModulePresentation] = None,
        name: Optional[str] = None,
    ) -> None:
        """Initialize a complex.

        Args:
            ring: Coefficient ring.
            window: Degrees `(lo, hi)` stored explicitly.
            differentials: Maps `d_n` for `n` in `(lo, hi]`; missing ones must be inferable as zero maps from `ranks`.
            ranks: Ranks of the modules; inferred from the differentials where omitted.
            periodicity: Periodic extension beyond the window.
            augmentation: Presentation of `Im d_0`, identified with `coker d_1`.
            name: Optional display name.
        """
        self.ring = ring
        self.window = Window(*window)
        if self.window.lo > self.window.hi:
            msg = f"Empty window {self.window}"
            raise WindowMismatchError(msg)

        if any(n not in self.window or n == self.window.lo for n in differentials):
            msg = f"Differentials must have degrees in ({self.window.lo}, {self.window.hi}]"
            raise WindowMismatchError(msg)

        self._ranks = self._infer_ranks(differentials, ranks or {})
        self._differentials: dict[int, FreeMap] = {}
        for n in range(self.window.lo + 1, self.window.hi + 1):
            d = differentials.get(n) or FreeMap.zero(ring, self._ranks[n - 1], self._ranks[n])
            if d.shape != (self._ranks[n - 1], self._ranks[n]):
                msg = f"Differential in degree {n} has shape {d.shape}, expected {(self._ranks[n - 1], self._ranks[n])}"
                raise ShapeMismatchError(msg)

            self._differentials[n] = d if d.ring is ring else d.over(ring)

        self.periodicity = periodicity
        self.augmentation = augmentation
        self.name = name
        if periodicity is not None:
            self._check_periodic_ranks(periodicity)

    def _infer_ranks(self, differentials: Mapping[int, FreeMap], ranks: Mapping[int, int]) -> dict[int, int]:
        inferred: dict[int, int] = {}
        for n, d in differentials.items():
            for degree, rank in ((n, d.source_rank), (n - 1, d.target_rank)):
                if inferred.setdefault(degree, rank) != rank:
                    msg = f"Inconsistent ranks in degree {degree}"
                    raise ShapeMismatchError(msg)

        for degree, rank in ranks.items():
            if degree not in self.window:
                continue

            if inferred.setdefault(degree, rank) != rank:
                msg = f"Declared rank {rank} in degree {degree} disagrees with the differentials"
                raise ShapeMismatchError(msg)

        missing = [n for n in self.window.degrees() if n not in inferred]
        if missing:
            msg = f"Ranks of degrees {missing} cannot be inferred"
            raise ShapeMismatchError(msg)

        return inferred

    def _check_periodic_ranks(self, periodicity: Periodicity) -> None:
        p = periodicity.period
        if self.window.hi - self.window.lo < p:
            msg = f"Window {self.window} is too short for period {p}"
            raise WindowMismatchError(msg)

        lo, hi = self.window
        if periodicity.below and self._ranks[lo] != self._ranks[lo + p]:
            msg = f"Ranks at degrees {lo} and {lo + p} differ; periodic extension below is inconsistent"
            raise ShapeMismatchError(msg)

        if periodicity.above and self._ranks[hi] != self._ranks[hi - p]:
            msg = f"Ranks at degrees {hi} and {hi - p} differ; periodic extension above is inconsistent"
            raise ShapeMismatchError(msg)

    # Access
    # ------------------------------------------------------------------------
    def rank(self, degree: int) -> int:
        wrapped = wrap_object(degree, self.window, self.periodicity)
        return 0 if wrapped is None else self._ranks[wrapped]

    def differential(self, degree: int) -> FreeMap:
        """The map `d_degree: C_degree -> C_{degree-1}`, zero or periodic outside the window."""
        wrapped = wrap_differential(degree, self.window, self.periodicity)
        if wrapped is None:
            return FreeMap.zero(self.ring, self.rank(degree - 1), self.rank(degree))

        return self._differentials[wrapped]

    def ranks(self, window: tuple[int, int] | None = None) -> dict[int, int]:
        return {n: self.rank(n) for n in Window(*(window or self.window)).degrees()}

    def items(self) -> Iterator[tuple[int, FreeMap]]:
        """Stored differentials in ascending degree."""
        return iter(self._differentials.items())

    @property
    def is_bounded(self) -> bool:
        return self.periodicity is None or not (self.periodicity.below or self.periodicity.above)

    def is_zero(self) -> bool:
        return all(rank == 0 for rank in self._ranks.values())

    def is_minimal(self) -> bool:
        return all(d.is_minimal() for d in self._differentials.values())

    # Derived complexes
    # ------------------------------------------------------------------------
    def restrict(self, window: tuple[int, int]) -> ChainComplex:
        """Complex materialized on another window.

        A periodic side is kept only when the new window does not cut into the stored one on that side.
        """
        new = Window(*window)
        periodicity = None
        if self.periodicity is not None:
            below = self.periodicity.below and new.lo <= self.window.lo
            above = self.periodicity.above and new.hi >= self.window.hi
            if (below or above) and new.hi - new.lo >= self.periodicity.period:
                periodicity = Periodicity(self.periodicity.period, below=below, above=above)

        return ChainComplex(
            self.ring,
            new,
            {n: self.differential(n) for n in range(new.lo + 1, new.hi + 1)},
            ranks={n: self.rank(n) for n in new.degrees()},
            periodicity=periodicity,
            augmentation=self.augmentation if 0 in new else None,
            name=self.name,
        )

    def renamed(self, name: str | None) -> ChainComplex:
        return ChainComplex(
            self.ring,
            self.window,
            self._differentials,
            ranks=self._ranks,
            periodicity=self.periodicity,
            augmentation=self.augmentation,
            name=name,
        )

    @classmethod
    def zero(cls, ring: QuotientRing, window: tuple[int, int] = (0, 0), *, name: str | None = None) -> ChainComplex:
        return cls(ring, window, {}, ranks=dict.fromkeys(Window(*window).degrees(), 0), name=name)

    # Comparison
    # ------------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented

        return (
            self.window == other.window
            and self.periodicity == other.periodicity
            and self._ranks == other._ranks
            and self._differentials == other._differentials
        )

    def __hash__(self) -> int:
        return hash((self.window, self.periodicity, tuple(self._differentials.values())))

    def __repr__(self) -> str:
        label = self.name or "ChainComplex"
        return f"{label}(window={self.window}, ranks={self._ranks}, periodicity={self.periodicity})"


class ValidationReport(NamedTuple):
    """Outcome of `validate_complex()`."""

    valid: bool
    failing_degree: int | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_complex(complex_: ChainComplex) -> ValidationReport:
    """Check `d_{n-1} d_n = 0` on the window and one period of the periodic extension on each side.

    Returns:
        Report naming the first degree `n`, ascending, with `d_{n-1} d_n != 0`.
    """
    p = complex_.periodicity.period if complex_.periodicity is not None else 0
    lo, hi = complex_.window
    for n in range(lo + 1 - p, hi + 1 + p):
        try:
            product = complex_.differential(n - 1) @ complex_.differential(n)
        except RankMismatchError:
            return ValidationReport(valid=False, failing_degree=n)

        if not product.is_zero():
            logger.debug("Differentials d_%d and d_%d do not compose to zero", n - 1, n)
            return ValidationReport(valid=False, failing_degree=n)

    return ValidationReport(valid=True)


def validated(complex_: ChainComplex) -> ChainComplex:
    """Return the complex after checking it, raising on failure."""
    report = validate_complex(complex_)
    if not report:
        msg = f"Differentials of {complex_!r} do not compose to zero at degree {report.failing_degree}"
        raise InvalidComplexError(msg)

    return complex_
