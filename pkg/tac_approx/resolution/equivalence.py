"""Homotopy equivalences between totally acyclic complexes with isomorphic degree zero images."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

from tac_approx.algebra import FreeMap, ModulePresentation, NotMember
from tac_approx.complexes import ChainMap, Homotopy, NotHomotopic, Window
from tac_approx.settings import Settings

from .errors import LiftError
from .homotopy import find_homotopy
from .lifting import comparison_map

if TYPE_CHECKING:
    from tac_approx.complexes import ChainComplex

logger = logging.getLogger(__name__)

ATTEMPTS = 4


class Equivalence(NamedTuple):
    """Mutually inverse chain maps up to the recorded homotopies."""

    forward: ChainMap
    backward: ChainMap
    source_homotopy: Homotopy
    """Homotopy from `backward @ forward` to the identity of the source."""

    target_homotopy: Homotopy
    """Homotopy from `forward @ backward` to the identity of the target."""


@dataclass(frozen=True)
class NotEquivalent:
    """No equivalence was found; `degree` is set when a composite failed to be homotopic to the identity."""

    reason: str
    degree: int | None = None

    def __bool__(self) -> bool:
        return False


def degree_zero_module(complex_: ChainComplex) -> ModulePresentation:
    """The module `coker d_1`, isomorphic to the image of `d_0` when the complex is exact in degree zero."""
    return ModulePresentation(complex_.differential(1))


def _combination(maps: list[FreeMap], rng: random.Random, shape: tuple[int, int], source: ChainComplex) -> FreeMap:
    combination = FreeMap.zero(source.ring, *shape)
    for m in maps:
        combination = combination + m.scale(rng.randrange(1, source.ring.modulus))

    return combination


def _candidate_pools(
    source_module: ModulePresentation,
    target_module: ModulePresentation,
) -> list[list[FreeMap]]:
    # Constant homomorphisms come first; `1 + z^2` is a unit of the local ring only
    maps = source_module.homomorphisms(target_module)
    constant = []
    for m in maps:
        residue = m.residue()
        if not residue.is_zero() and residue not in constant and source_module.induces_map(target_module, residue):
            constant.append(residue)

    return [pool for pool in (constant, maps) if pool]


def find_equivalence(
    source: ChainComplex,
    target: ChainComplex,
    *,
    window: tuple[int, int] | None = None,
    settings: Settings | None = None,
    attempts: int = ATTEMPTS,
) -> Equivalence | NotEquivalent:
    """Search for a homotopy equivalence `source -> target` on a window.

    A random combination of the homomorphisms between the degree zero modules is tried as the degree
    zero component; when it is an isomorphism, it and its inverse are lifted to chain maps and both
    composites are tested against the identities. Inputs should be minimal in degrees zero and one.

    Args:
        source: Totally acyclic complex.
        target: Totally acyclic complex over the same ring.
        window: Degrees of the chain maps; the homotopies are checked one degree inside.
        settings: Seed for the random combinations.
        attempts: Number of random combinations tried.
    """
    settings = settings or Settings()
    lo, hi = Window(*(window or settings.default_window))
    source_module, target_module = degree_zero_module(source), degree_zero_module(target)
    pools = _candidate_pools(source_module, target_module) or [[]]
    minimal = source_module.relations.is_minimal() and target_module.relations.is_minimal()
    rng = random.Random(settings.seed)  # noqa: S311
    shape = (target.rank(0), source.rank(0))
    candidates = [pool for pool in pools for _ in range(attempts)]
    for attempt, pool in enumerate(candidates):
        alpha = _combination(pool, rng, shape, source)
        # On minimal presentations an isomorphism is invertible modulo the maximal ideal
        if minimal and not alpha.is_invertible():
            logger.debug("Attempt %d: degree zero map is singular modulo the maximal ideal", attempt)
            continue

        beta = source_module.inverse_homomorphism(target_module, alpha)
        if isinstance(beta, NotMember):
            logger.debug("Attempt %d: degree zero map is not an isomorphism", attempt)
            continue

        try:
            forward = comparison_map(source, target, alpha, (lo, hi))
            backward = comparison_map(target, source, beta, (lo, hi))
        except LiftError as err:
            return NotEquivalent(f"cannot lift the degree zero isomorphism: {err}")

        inner = (lo + 1, hi - 1)
        source_homotopy = find_homotopy(ChainMap.identity(source), backward @ forward, inner)
        if isinstance(source_homotopy, NotHomotopic):
            return NotEquivalent("backward after forward is not homotopic to the identity", source_homotopy.degree)

        target_homotopy = find_homotopy(ChainMap.identity(target), forward @ backward, inner)
        if isinstance(target_homotopy, NotHomotopic):
            return NotEquivalent("forward after backward is not homotopic to the identity", target_homotopy.degree)

        logger.info("Found an equivalence on %d..%d after %d attempts", lo, hi, attempt + 1)
        return Equivalence(forward, backward, source_homotopy, target_homotopy)

    return NotEquivalent(f"degree zero modules are not isomorphic after {len(candidates)} random combinations")
