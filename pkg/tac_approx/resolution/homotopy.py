"""Search for homotopies between chain maps of totally acyclic complexes."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from tac_approx.algebra import FreeMap, NotMember, solve, solve_left, solve_matrix_equation
from tac_approx.complexes import Homotopy, NotHomotopic, Window, WindowMismatchError

if TYPE_CHECKING:
    from tac_approx.complexes import ChainMap

logger = logging.getLogger(__name__)


def find_homotopy(f: ChainMap, g: ChainMap, window: tuple[int, int] | None = None) -> Homotopy | NotHomotopic:
    """Find `s` with `f_n - g_n = d'_{n+1} s_n + s_{n-1} d_n` for every `n` in the window.

    Both sides of a seed degree are solved jointly, then the remaining components are solved one at a
    time upward through the target's differentials and downward through the source's. A failure in the
    seed degree is decisive; a later failure is reported with the degree where it happened.

    Args:
        f: Chain map `S -> T`.
        g: Chain map with the same source and target.
        window: Degrees where the identity is demanded; defaults to the interior of the common window.

    Returns:
        Homotopy on the window widened by one degree, or `NotHomotopic`.
    """
    lo, hi = Window(*window) if window is not None else f.common_support(g)[0].shrink()
    if lo > hi:
        msg = f"Empty window {lo}..{hi} for a homotopy"
        raise WindowMismatchError(msg)

    source, target = f.source, f.target
    ring = f.ring
    difference = {n: f.component(n) - g.component(n) for n in range(lo, hi + 1)}
    sigma = {n: FreeMap.zero(ring, target.rank(n + 1), source.rank(n)) for n in range(lo - 1, hi + 2)}
    result_window = (lo - 1, hi + 1)
    if all(h.is_zero() for h in difference.values()):
        return Homotopy(source, target, sigma, window=result_window)

    seed = 0 if lo <= 0 <= hi else lo
    joint = solve_matrix_equation(
        [
            (target.differential(seed + 1), FreeMap.identity(ring, source.rank(seed))),
            (FreeMap.identity(ring, target.rank(seed)), source.differential(seed)),
        ],
        difference[seed],
    )
    if isinstance(joint, NotMember):
        return NotHomotopic(seed, "the difference is not a boundary in the seed degree")

    sigma[seed], sigma[seed - 1] = joint

    # Upward through the target
    for n in range(seed + 1, hi + 1):
        component = solve(target.differential(n + 1), difference[n] - sigma[n - 1] @ source.differential(n))
        if isinstance(component, NotMember):
            return NotHomotopic(n, f"no homotopy component in degree {n}: {component.reason}")

        sigma[n] = component

    # Downward through the source
    for n in range(seed - 1, lo - 1, -1):
        component = solve_left(source.differential(n), difference[n] - target.differential(n + 1) @ sigma[n])
        if isinstance(component, NotMember):
            return NotHomotopic(n, f"no homotopy component in degree {n - 1}: {component.reason}")

        sigma[n - 1] = component

    logger.debug("Found a homotopy on %d..%d seeded in degree %d", lo, hi, seed)
    return Homotopy(source, target, sigma, window=result_window)
