from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from tac_approx.complexes import ChainComplex

logger = logging.getLogger(__name__)

MAX_PERIOD = 2


class PeriodicTail(NamedTuple):
    """Differentials repeat with `period` from degree `onset` on."""

    period: int
    onset: int


def detect_periodicity(resolution: ChainComplex, *, max_period: int = MAX_PERIOD) -> PeriodicTail | None:
    """Smallest period, then earliest onset, with `d_{n+p} == d_n` for every represented `n >= onset`.

    At least `p` equalities must be observed. A resolution that terminates on its window has no
    periodic tail.
    """
    lo, hi = resolution.window
    if resolution.rank(hi) == 0:
        return None

    for period in range(1, max_period + 1):
        for onset in range(lo + 1, hi - 2 * period + 2):
            if all(
                resolution.differential(n) == resolution.differential(n + period) for n in range(onset, hi - period + 1)
            ):
                logger.info("Differentials repeat with period %d from degree %d", period, onset)
                return PeriodicTail(period, onset)

    return None
