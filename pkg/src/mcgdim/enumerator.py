"""Exhaustive search for quotient signatures of the closed non-orientable surface N_g.

For a group of order ``N`` acting on ``N_g`` the quotient orbifold satisfies
``N * chi(O) = 2 - g``. Multiplying through by ``2N`` turns every term into an
integer once the local groups are constrained by Lagrange's theorem:

* a cone point of order ``q`` has cyclic stabilizer, so ``q | N`` and it
  contributes ``2N - 2N/q``;
* a corner reflector of order ``p`` has dihedral stabilizer, so ``2p | N`` and
  it contributes ``N - N/p``;
* a mirror needs an involution, so mirrors only occur for even ``N``.

The search fixes orientability, genus and the boundary split, then distributes
the remaining integer deficit over cone points and corner words exactly.
"""

from __future__ import annotations

import os
from typing import Iterator

from . import _kernels
from .orbifolds import BoundaryComponent, OrbifoldSignature, orbifold_euler

ENV_MAX_ORDER = "MCGDIM_MAX_ORDER"


def hurwitz_ceiling(g: int) -> int:
    """``84(g - 2)``: no hyperbolic 2-orbifold has ``|chi| < 1/84``."""
    return 84 * (g - 2)


def default_max_order(g: int) -> int:
    env = os.environ.get(ENV_MAX_ORDER)
    if env:
        value = int(env)
        if value < 1:
            raise ValueError(f"{ENV_MAX_ORDER} must be positive, got {value}")
        return value
    return hurwitz_ceiling(g)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _shapes(g: int, order: int) -> Iterator[tuple[bool, int, int, int]]:
    """Yield ``(orientable, genus, boundaries, deficit)`` with non-negative deficit."""
    floor_chi = -(-(2 - g) // order)  # ceil((2 - g) / order)
    for orientable in (False, True):
        step = 2 if orientable else 1
        genus = 0 if orientable else 1
        while 2 - step * genus >= floor_chi:
            b = 0
            while 2 - step * genus - b >= floor_chi:
                chi_x = 2 - step * genus - b
                yield orientable, genus, b, 2 * order * chi_x + 2 * (g - 2)
                b += 1
            genus += 1


def enumerate_signatures(g: int, order: int) -> list[OrbifoldSignature]:
    """Every canonical quotient signature of ``N_g`` compatible with a group of ``order``.

    The list is duplicate-free and sorted by (orientability, genus, boundary
    count, rendered text).
    """
    if g < 3:
        raise ValueError(f"source genus must be at least 3, got {g}")
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")

    divs = _divisors(order)
    qs = [q for q in divs if q >= 2]
    q_weights = [2 * order - 2 * order // q for q in qs]
    ps = [p for p in divs if p >= 2 and order % (2 * p) == 0]
    p_weights = [order - order // p for p in ps]
    mirrors_ok = order % 2 == 0

    shapes = list(_shapes(g, order))
    max_deficit = max((d for *_, d in shapes), default=-1)
    if max_deficit < 0:
        return []
    elliptic = _kernels.bounded_multisets(q_weights, max_deficit)

    def budget(min_b: int) -> int:
        return max((d for _, _, b, d in shapes if b >= min_b), default=-1)

    words = _kernels.dihedral_words(p_weights, budget(1)) if mirrors_ok else []
    words.sort(key=lambda wt: (wt[1], wt[0]))
    word_weights = [w for _, w in words]

    corner_tables: dict[int, dict[int, list[tuple[int, ...]]]] = {0: {0: [()]}}

    def corners_for(bc: int) -> dict[int, list[tuple[int, ...]]]:
        if bc not in corner_tables:
            by_total: dict[int, list[tuple[int, ...]]] = {}
            for idx, total in _kernels.bounded_multisets(word_weights, budget(bc), bc):
                if len(idx) == bc:
                    by_total.setdefault(total, []).append(idx)
            corner_tables[bc] = by_total
        return corner_tables[bc]

    found: set[OrbifoldSignature] = set()
    for orientable, genus, b, deficit in shapes:
        if b and not mirrors_ok:
            continue
        for bc in range(b + 1):
            bm = b - bc
            table = corners_for(bc)
            for e_idx, e_total in elliptic:
                if e_total > deficit:
                    continue
                for w_idx in table.get(deficit - e_total, ()):
                    bounds = [BoundaryComponent(())] * bm
                    bounds += [BoundaryComponent(tuple(ps[i] for i in words[k][0])) for k in w_idx]
                    found.add(
                        OrbifoldSignature(
                            orientable, genus, tuple(qs[i] for i in e_idx), tuple(bounds)
                        )
                    )
    out = sorted(found, key=_order_key)
    return out


def _order_key(sig: OrbifoldSignature) -> tuple:
    return (sig.orientable, sig.genus, sig.b, str(sig))


def enumerate_all(g: int, max_order: int | None = None) -> list[tuple[int, OrbifoldSignature]]:
    """Concatenate :func:`enumerate_signatures` over orders ``2..max_order`` ascending."""
    if g < 3:
        raise ValueError(f"source genus must be at least 3, got {g}")
    if max_order is None:
        max_order = default_max_order(g)
    out: list[tuple[int, OrbifoldSignature]] = []
    for order in range(2, max_order + 1):
        out.extend((order, sig) for sig in enumerate_signatures(g, order))
    return out


def check_sound(g: int, order: int, sig: OrbifoldSignature) -> bool:
    return order * orbifold_euler(sig) == 2 - g
