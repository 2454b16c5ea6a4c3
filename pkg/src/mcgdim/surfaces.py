"""Surfaces and the virtual cohomological dimension of their mapping class groups."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple


class Kind(enum.Enum):
    ORIENTABLE = "S"
    NON_ORIENTABLE = "N"


@dataclass(frozen=True, order=True)
class Surface:
    """A connected surface of given genus with ``n`` punctures and ``b`` boundary circles.

    For orientable surfaces the genus counts handles; for non-orientable ones it
    counts cross-caps and must be at least 1.
    """

    kind: Kind
    genus: int
    punctures: int = 0
    boundaries: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.kind, Kind):
            raise TypeError(f"kind must be a Kind, got {self.kind!r}")
        for name in ("genus", "punctures", "boundaries"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")
        if self.kind is Kind.NON_ORIENTABLE and self.genus < 1:
            raise ValueError("non-orientable genus must be at least 1")

    @property
    def orientable(self) -> bool:
        return self.kind is Kind.ORIENTABLE

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.genus},{self.punctures},{self.boundaries}"


def N(genus: int, punctures: int = 0, boundaries: int = 0) -> Surface:
    return Surface(Kind.NON_ORIENTABLE, genus, punctures, boundaries)


def S(genus: int, punctures: int = 0, boundaries: int = 0) -> Surface:
    return Surface(Kind.ORIENTABLE, genus, punctures, boundaries)


def euler_characteristic(s: Surface) -> int:
    closed = 2 - 2 * s.genus if s.orientable else 2 - s.genus
    return closed - s.punctures - s.boundaries


def is_hyperbolic(s: Surface) -> bool:
    return euler_characteristic(s) < 0


def _vcd_orientable(g: int, n: int, b: int) -> int:
    k = n + b
    if g == 0:
        return b if k <= 3 else n + 2 * b - 3
    if g == 1:
        return 1 + b if k == 0 else n + 2 * b
    return 4 * g - 5 if k == 0 else 4 * g + n + 2 * b - 4


def _vcd_non_orientable(g: int, n: int, b: int) -> int:
    k = n + b
    if g == 1:
        return b if k <= 2 else n + 2 * b - 2
    if g == 2:
        return n + 2 * b
    return 2 * g - 5 if k == 0 else 2 * g + n + 2 * b - 4


def vcd_mcg(s: Surface) -> int:
    """Virtual cohomological dimension of the mapping class group of ``s``.

    Boundary circles are fixed pointwise and punctures may be permuted. Every
    valid surface is covered, including the spherical and Euclidean ones, whose
    mapping class groups are finite or virtually small.
    """
    if not isinstance(s, Surface):
        raise TypeError(f"expected a Surface, got {s!r}")
    if s.orientable:
        return _vcd_orientable(s.genus, s.punctures, s.boundaries)
    return _vcd_non_orientable(s.genus, s.punctures, s.boundaries)


def vcd_pure_mcg(s: Surface) -> int:
    # The pure subgroup has finite index.
    return vcd_mcg(s)


class DimensionBounds(NamedTuple):
    lower: int
    upper: int
    equal: bool


def known_dimension_bounds(s: Surface) -> DimensionBounds:
    """Proven bracket ``lower <= cd_F <= gd_F <= upper`` for the mapping class group.

    For punctured non-orientable surfaces without boundary the bracket refers to
    the pure mapping class group. Orientable surfaces and surfaces with boundary
    always have all three dimensions equal.
    """
    v = vcd_mcg(s)
    if s.orientable or s.boundaries >= 1:
        return DimensionBounds(v, v, True)
    slack = {4: 3, 5: 1}.get(s.genus, 0)
    return DimensionBounds(v, v + slack, slack == 0)
