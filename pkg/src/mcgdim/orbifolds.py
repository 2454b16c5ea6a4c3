"""Quotient 2-orbifold signatures and their Euler characteristic bookkeeping.

All arithmetic is exact; rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .surfaces import Kind, Surface, vcd_mcg

Rational = Fraction


def canonical_corners(corners: Iterable[int]) -> tuple[int, ...]:
    """Least representative of a cyclic corner sequence under rotation and reflection."""
    word = tuple(corners)
    if not word:
        return word
    images = []
    for w in (word, word[::-1]):
        for s in range(len(w)):
            images.append(w[s:] + w[:s])
    return min(images)


def _check_order(value: int, what: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what} must be an int, got {value!r}")
    if value < 2:
        raise ValueError(f"{what} must be at least 2, got {value}")


@dataclass(frozen=True, order=True)
class BoundaryComponent:
    """A boundary circle of the underlying surface, lying in the mirror locus.

    ``corners`` lists the corner reflector orders met going around the circle;
    an empty tuple is a mirror-only boundary. The sequence is stored in its
    canonical dihedral form, so two components compare equal exactly when their
    corner sequences agree up to rotation and reflection.
    """

    corners: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        corners = tuple(self.corners)
        for p in corners:
            _check_order(p, "corner order")
        object.__setattr__(self, "corners", canonical_corners(corners))

    @property
    def mirror_only(self) -> bool:
        return not self.corners


@dataclass(frozen=True)
class OrbifoldSignature:
    orientable: bool
    genus: int
    elliptic: tuple[int, ...] = ()
    boundaries: tuple[BoundaryComponent, ...] = field(default=())

    def __post_init__(self) -> None:
        if isinstance(self.genus, bool) or not isinstance(self.genus, int):
            raise TypeError(f"genus must be an int, got {self.genus!r}")
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")
        if not self.orientable and self.genus < 1:
            raise ValueError("non-orientable genus must be at least 1")
        elliptic = tuple(sorted(self.elliptic))
        for q in elliptic:
            _check_order(q, "elliptic order")
        bounds = tuple(
            sorted(
                b if isinstance(b, BoundaryComponent) else BoundaryComponent(tuple(b))
                for b in self.boundaries
            )
        )
        object.__setattr__(self, "orientable", bool(self.orientable))
        object.__setattr__(self, "elliptic", elliptic)
        object.__setattr__(self, "boundaries", bounds)

    @property
    def e_F(self) -> int:
        return len(self.elliptic)

    @property
    def c_F(self) -> int:
        return sum(len(b.corners) for b in self.boundaries)

    @property
    def b_m(self) -> int:
        return sum(1 for b in self.boundaries if b.mirror_only)

    @property
    def b_c(self) -> int:
        return len(self.boundaries) - self.b_m

    @property
    def b(self) -> int:
        return len(self.boundaries)

    @property
    def corner_orders(self) -> tuple[int, ...]:
        return tuple(p for b in self.boundaries for p in b.corners)

    def sort_key(self) -> tuple:
        return (
            self.orientable,
            self.genus,
            self.b,
            self.elliptic,
            tuple(b.corners for b in self.boundaries),
        )

    def __str__(self) -> str:
        from .sigio import render_signature

        return render_signature(self)


class SingularSums(NamedTuple):
    E_F: Fraction
    C_F: Fraction


def ef_cf(sig: OrbifoldSignature) -> SingularSums:
    E = sum((1 - Fraction(1, q) for q in sig.elliptic), Fraction(0))
    C = sum((1 - Fraction(1, p) for p in sig.corner_orders), Fraction(0))
    return SingularSums(E, C)


def underlying_euler(sig: OrbifoldSignature) -> int:
    handles = 2 * sig.genus if sig.orientable else sig.genus
    return 2 - handles - sig.b


def orbifold_euler(sig: OrbifoldSignature) -> Fraction:
    E, C = ef_cf(sig)
    return underlying_euler(sig) - C / 2 - E


def rh_order(sig: OrbifoldSignature, g: int) -> Optional[int]:
    """Group order forced by Riemann-Hurwitz for a quotient of the closed surface N_g.

    Returns ``None`` when the signature is not hyperbolic or the order would
    not be a positive integer.
    """
    if g < 3:
        raise ValueError(f"source genus must be at least 3, got {g}")
    chi = orbifold_euler(sig)
    if chi >= 0:
        return None
    order = Fraction(2 - g) / chi
    if order.denominator != 1:
        return None
    return int(order)


def underlying_surface(sig: OrbifoldSignature) -> Surface:
    """Underlying surface with cone points and mirror-only circles turned into punctures."""
    kind = Kind.ORIENTABLE if sig.orientable else Kind.NON_ORIENTABLE
    return Surface(kind, sig.genus, sig.e_F + sig.b_m, sig.b_c)


def vcd_weyl(sig: OrbifoldSignature) -> int:
    return vcd_mcg(underlying_surface(sig))


def vcd_weyl_table(sig: OrbifoldSignature) -> int:
    """Weyl-group vcd read off the quotient case tables in terms of e_F, b_m, b_c.

    Independent of :func:`vcd_weyl`; the two are compared in the test suite.
    """
    g, e, bm, bc = sig.genus, sig.e_F, sig.b_m, sig.b_c
    b = bm + bc
    if sig.orientable:
        if g == 0:
            return bc if e + b <= 2 else e + bm + 2 * bc - 3
        if g == 1:
            return 1 + bc if e + b == 0 else e + bm + 2 * bc
        return 4 * g - 5 if e + b == 0 else 4 * g + e + bm + 2 * bc - 4
    if g == 1:
        return bc if e + b <= 2 else e + bm + 2 * bc - 2
    if g == 2:
        return e + bm + 2 * bc
    return 2 * g - 5 if e + b == 0 else 2 * g + e + bm + 2 * bc - 4


def validate_inequalities(sig: OrbifoldSignature) -> bool:
    E, C = ef_cf(sig)
    e, c = sig.e_F, sig.c_F
    return Fraction(e, 2) <= E <= e and Fraction(c, 2) <= C <= c
