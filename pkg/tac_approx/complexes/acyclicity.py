from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from tac_approx.algebra import Submodule, syzygies

from .complex import Window
from .constructions import dualize

if TYPE_CHECKING:
    from .complex import ChainComplex

logger = logging.getLogger(__name__)


class Side(str, Enum):
    COMPLEX = "complex"
    DUAL = "dual"


@dataclass(frozen=True)
class AcyclicityReport:
    """Outcome of `total_acyclicity_check()`; falsy when some homology was found."""

    acyclic: bool
    failing_degree: int | None = None
    side: Side | None = None

    def __bool__(self) -> bool:
        return self.acyclic

    def describe(self) -> str:
        if self.acyclic:
            return "totally acyclic"

        where = self.side.value if self.side else "complex"
        return f"not acyclic: homology of the {where} in degree {self.failing_degree}"


def is_exact_at(complex_: ChainComplex, degree: int) -> bool:
    """Whether every cycle in `degree` is a boundary."""
    cycles = syzygies(complex_.differential(degree))
    incoming = complex_.differential(degree + 1)
    boundaries = Submodule(incoming.columns(), complex_.ring, rank=incoming.target_rank)
    return all(boundaries.contains(cycle) for cycle in cycles.columns())


def first_homology(complex_: ChainComplex, window: tuple[int, int]) -> int | None:
    """First degree strictly inside the window with nonzero homology."""
    for n in Window(*window).shrink().degrees():
        if not is_exact_at(complex_, n):
            logger.debug("Homology in degree %d", n)
            return n

    return None


def total_acyclicity_check(complex_: ChainComplex, window: tuple[int, int] | None = None) -> AcyclicityReport:
    """Check exactness of a complex and of its dual at every interior degree of a window.

    Args:
        complex_: Complex to check.
        window: Degrees to check, without their endpoints; defaults to the complex's window.

    Returns:
        Report naming the first failing degree, ascending, on the complex first and then on its dual.
    """
    lo, hi = window or complex_.window
    failing = first_homology(complex_, (lo, hi))
    if failing is not None:
        return AcyclicityReport(acyclic=False, failing_degree=failing, side=Side.COMPLEX)

    failing = first_homology(dualize(complex_), (-hi, -lo))
    if failing is not None:
        return AcyclicityReport(acyclic=False, failing_degree=failing, side=Side.DUAL)

    return AcyclicityReport(acyclic=True)
