"""Categorical constructions on complexes: shifts, duals, cones, base change and tensor products."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from tac_approx.algebra import FreeMap, NotMember, RingMismatchError, solve, syzygies

from .chain_map import ChainMap
from .complex import ChainComplex, Window, validated
from .errors import NotSurjectiveError, UnboundedComplexError, WindowMismatchError

if TYPE_CHECKING:
    from collections.abc import Sequence

    from tac_approx.algebra import QuotientRing

logger = logging.getLogger(__name__)


# Shift
# ----------------------------------------------------------------------------
def shift(complex_: ChainComplex, k: int) -> ChainComplex:
    """The complex `Σ^k C` with `(Σ^k C)_n = C_{n-k}` and differentials multiplied by `(-1)^k`."""
    lo, hi = complex_.window
    sign = -1 if k % 2 else 1
    return ChainComplex(
        complex_.ring,
        (lo + k, hi + k),
        {n + k: d.scale(sign) for n, d in complex_.items()},
        ranks={n + k: complex_.rank(n) for n in complex_.window.degrees()},
        periodicity=complex_.periodicity,
        augmentation=complex_.augmentation if k == 0 else None,
        name=complex_.name,
    )


def shift_map(
    f: ChainMap,
    k: int,
    *,
    source: ChainComplex | None = None,
    target: ChainComplex | None = None,
) -> ChainMap:
    """The map `Σ^k f`, with components moved up `k` degrees and unchanged."""
    lo, hi = f.window
    return ChainMap(
        source or shift(f.source, k),
        target or shift(f.target, k),
        {n + k: component for n, component in f.items()},
        window=(lo + k, hi + k),
        periodicity=f.periodicity,
    )


# Duality
# ----------------------------------------------------------------------------
def dualize(complex_: ChainComplex) -> ChainComplex:
    """The complex `C* = Hom(C, ring)` with `(C*)_n = (C_{-n})*` and `d*_n = (d_{1-n})^T`."""
    lo, hi = complex_.window
    return ChainComplex(
        complex_.ring,
        (-hi, -lo),
        {1 - n: d.transpose() for n, d in complex_.items()},
        ranks={-n: complex_.rank(n) for n in complex_.window.degrees()},
        periodicity=complex_.periodicity.swapped() if complex_.periodicity is not None else None,
        name=f"{complex_.name}*" if complex_.name else None,
    )


def dualize_map(f: ChainMap, *, source: ChainComplex | None = None, target: ChainComplex | None = None) -> ChainMap:
    """The map `f*: T* -> S*` with `(f*)_n = (f_{-n})^T`."""
    lo, hi = f.window
    return ChainMap(
        source or dualize(f.target),
        target or dualize(f.source),
        {-n: component.transpose() for n, component in f.items()},
        window=(-hi, -lo),
        periodicity=f.periodicity.swapped() if f.periodicity is not None else None,
    )


# Cones
# ----------------------------------------------------------------------------
def cone(f: ChainMap) -> ChainComplex:
    """Mapping cone with `cone_n = T_n ⊕ S_{n-1}` and differential `[[d^T_n, f_{n-1}], [0, -d^S_{n-1}]]`.

    Raises:
        WindowMismatchError: If the map's window is a single degree.
    """
    lo, hi = f.window
    if hi <= lo:
        msg = f"Cannot form a cone over the window {f.window}"
        raise WindowMismatchError(msg)

    source, target, ring = f.source, f.target, f.ring
    differentials = {}
    for n in range(lo + 2, hi + 1):
        differentials[n] = FreeMap.block(
            [
                [target.differential(n), f.component(n - 1)],
                [FreeMap.zero(ring, source.rank(n - 2), target.rank(n)), -source.differential(n - 1)],
            ]
        )

    ranks = {n: target.rank(n) + source.rank(n - 1) for n in range(lo + 1, hi + 1)}
    name = f"cone({f.name})" if f.name else None
    return validated(ChainComplex(ring, (lo + 1, hi), differentials, ranks=ranks, name=name))


def truncated_cone(f: ChainMap) -> ChainComplex:
    """Truncated mapping cone of a lift `f: F -> G` of a surjection between the resolved modules.

    Degree `n >= 2` is `F_{n-1} ⊕ G_n` with differential `[[-d^F_{n-1}, 0], [f_{n-1}, d^G_n]]`. Degree
    one is the kernel of `[f_0 d^G_1]`, represented by a free basis; the complex is zero below.

    Raises:
        NotSurjectiveError: If `f_0` is not surjective modulo the maximal ideal.
    """
    source, target, ring = f.source, f.target, f.ring
    phi0 = f.component(0)
    if phi0.constant_rank() != target.rank(0):
        msg = "The degree zero component is not surjective modulo the maximal ideal"
        raise NotSurjectiveError(msg)

    top = min(source.window.hi + 1, target.window.hi, f.window.hi + 1)
    if top < 1:
        msg = f"Windows of {f!r} are too short for a truncated cone"
        raise WindowMismatchError(msg)

    def cone_differential(n: int) -> FreeMap:
        return FreeMap.block(
            [
                [-source.differential(n - 1), FreeMap.zero(ring, source.rank(n - 2), target.rank(n))],
                [f.component(n - 1), target.differential(n)],
            ]
        )

    augmentation_map = FreeMap.block([[phi0, target.differential(1)]])
    basis = syzygies(augmentation_map)
    differentials = {}
    for n in range(2, top + 1):
        d = cone_differential(n)
        if n == 2:  # noqa: PLR2004
            expressed = solve(basis, d)
            if isinstance(expressed, NotMember):
                msg = "Cone differential does not land in the kernel of the augmentation"
                raise NotSurjectiveError(msg)

            d = expressed

        differentials[n] = d

    ranks = {1: basis.source_rank} | {n: source.rank(n - 1) + target.rank(n) for n in range(2, top + 1)}
    logger.debug("Truncated cone with ranks %s", ranks)
    return validated(ChainComplex(ring, (1, top), differentials, ranks=ranks))


# Change of rings
# ----------------------------------------------------------------------------
def _check_quotient(source_ring: QuotientRing, ring: QuotientRing) -> None:
    if not ring.is_quotient_of(source_ring):
        msg = f"{ring!r} is not a quotient of {source_ring!r}"
        raise RingMismatchError(msg)


def base_change(complex_: ChainComplex, ring: QuotientRing) -> ChainComplex:
    """The complex `C ⊗ R` over a quotient ring `R`, with every entry reduced into `R`.

    Raises:
        RingMismatchError: If `ring` is not a quotient of the complex's ring.
    """
    _check_quotient(complex_.ring, ring)
    return ChainComplex(
        ring,
        complex_.window,
        {n: d.over(ring) for n, d in complex_.items()},
        ranks=complex_.ranks(),
        periodicity=complex_.periodicity,
        augmentation=complex_.augmentation.over(ring) if complex_.augmentation is not None else None,
        name=complex_.name,
    )


def base_change_map(
    f: ChainMap,
    ring: QuotientRing,
    *,
    source: ChainComplex | None = None,
    target: ChainComplex | None = None,
) -> ChainMap:
    """The map `f ⊗ R`."""
    _check_quotient(f.ring, ring)
    return ChainMap(
        source or base_change(f.source, ring),
        target or base_change(f.target, ring),
        {n: component.over(ring) for n, component in f.items()},
        window=f.window,
        periodicity=f.periodicity,
    )


# Sums and tensor products
# ----------------------------------------------------------------------------
def direct_sum(complexes: Sequence[ChainComplex]) -> ChainComplex:
    """Degreewise direct sum over the common window."""
    window = complexes[0].window
    for other in complexes[1:]:
        window = window.intersect(other.window)

    ring = complexes[0].ring
    return ChainComplex(
        ring,
        window,
        {
            n: FreeMap.direct_sum([c.differential(n) for c in complexes], ring)
            for n in range(window.lo + 1, window.hi + 1)
        },
        ranks={n: sum(c.rank(n) for c in complexes) for n in window.degrees()},
    )


def tensor_complexes(d: ChainComplex, k: ChainComplex) -> ChainComplex:
    """Tensor product `D ⊗ K` of a complex with a bounded complex.

    Degree `n` is `⊕_i D_{n-i} ⊗ K_i` with blocks in ascending `i`, and the differential is
    `d(a ⊗ b) = (-1)^|b| da ⊗ b + a ⊗ db`. Periodicity of `D` carries over.

    Raises:
        UnboundedComplexError: If `K` is periodic.
    """
    if not k.is_bounded:
        msg = "The second factor of a tensor product must be bounded"
        raise UnboundedComplexError(msg)

    ring = d.ring
    klo, khi = k.window
    window = Window(d.window.lo + klo, d.window.hi + khi)
    blocks = range(klo, khi + 1)

    def rank(n: int) -> int:
        return sum(d.rank(n - i) * k.rank(i) for i in blocks)

    def identity(r: int) -> FreeMap:
        return FreeMap.identity(ring, r)

    differentials = {}
    for n in range(window.lo + 1, window.hi + 1):
        grid = []
        for j in blocks:  # target block, degree n-1 = (n-1-j) + j
            row = []
            for i in blocks:  # source block, degree n = (n-i) + i
                shape = (d.rank(n - 1 - j) * k.rank(j), d.rank(n - i) * k.rank(i))
                if j == i:
                    sign = -1 if i % 2 else 1
                    row.append(d.differential(n - i).kronecker(identity(k.rank(i))).scale(sign))
                elif j == i - 1:
                    row.append(identity(d.rank(n - i)).kronecker(k.differential(i)))
                else:
                    row.append(FreeMap.zero(ring, *shape))

            grid.append(row)

        differentials[n] = FreeMap.block(grid)

    return validated(
        ChainComplex(
            ring,
            window,
            differentials,
            ranks={n: rank(n) for n in window.degrees()},
            periodicity=d.periodicity,
        )
    )

