"""Upper bounds on the proper cohomological dimension of the closed mapping class group N_g.

For every finite subgroup ``F`` the quantity ``vcd(W F) + lambda(F)`` is bounded
using the quotient signature of ``F``; the maximum ``m_star`` over all
subgroups bounds ``cd_F``. Two sources of subgroups are supported:

``PureRH``
    every signature allowed by Riemann-Hurwitz and Lagrange up to an order
    ceiling, with ``lambda(F) <= Omega(|F|)``;
``Database``
    only the ingested action rows, with the row's exact length when given.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .enumerator import default_max_order, enumerate_all, hurwitz_ceiling
from .groups import omega
from .orbifolds import OrbifoldSignature, vcd_weyl
from .sigio import ActionRow, render_signature
from .surfaces import N, vcd_mcg


class Mode(enum.Enum):
    PURE_RH = "PureRH"
    DATABASE = "Database"


class CriterionError(ValueError):
    pass


class Witness(NamedTuple):
    order: int
    signature: OrbifoldSignature
    vcd_weyl: int
    lambda_bound: int

    @property
    def total(self) -> int:
        return self.vcd_weyl + self.lambda_bound

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "signature": render_signature(self.signature),
            "vcd_weyl": self.vcd_weyl,
            "lambda_bound": self.lambda_bound,
        }


@dataclass(frozen=True)
class CriterionReport:
    g: int
    mode: Mode
    m_star: int
    vcd_target: int
    witnesses: tuple[Witness, ...]
    ceiling_hit: bool = False
    max_order: Optional[int] = None
    examined: int = 0
    excess: tuple[Witness, ...] = field(default=(), repr=False)

    @property
    def cd_upper(self) -> int:
        return self.m_star

    @property
    def gd_upper(self) -> int:
        return max(3, self.cd_upper)

    @property
    def equal(self) -> bool:
        return self.m_star == self.vcd_target

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "mode": self.mode.value,
            "m_star": self.m_star,
            "vcd_target": self.vcd_target,
            "cd_upper": self.cd_upper,
            "gd_upper": self.gd_upper,
            "equal": self.equal,
            "ceiling_hit": self.ceiling_hit,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def trivial_witness(g: int) -> Witness:
    sig = OrbifoldSignature(False, g)
    return Witness(1, sig, vcd_mcg(N(g)), 0)


def _assemble(
    g: int, mode: Mode, candidates: Iterable[Witness], **extra
) -> CriterionReport:
    target = vcd_mcg(N(g))
    pool = [trivial_witness(g)]
    pool.extend(candidates)
    m_star = max(w.total for w in pool)
    witnesses = tuple(
        sorted(
            (w for w in pool if w.total == m_star),
            key=lambda w: (w.order, render_signature(w.signature)),
        )
    )
    excess = tuple(w for w in pool if w.total > target)
    return CriterionReport(
        g, mode, m_star, target, witnesses, examined=len(pool), excess=excess, **extra
    )


def check_criterion(
    g: int,
    mode: Mode | str = Mode.PURE_RH,
    actions: Optional[Sequence[ActionRow]] = None,
    max_order: Optional[int] = None,
) -> CriterionReport:
    """Evaluate ``max vcd(W F) + lambda-bound`` over the chosen family of subgroups.

    The trivial subgroup is always included. In PureRH mode ``ceiling_hit`` is
    set when ``max_order`` stops short of ``84(g - 2)``, above which no
    quotient can exist, so larger groups were left unexamined.
    """
    if g < 3:
        raise CriterionError(f"criterion needs g >= 3, got {g}")
    mode = Mode(mode)
    if mode is Mode.PURE_RH:
        if max_order is None:
            max_order = default_max_order(g)
        found = (
            Witness(order, sig, vcd_weyl(sig), omega(order))
            for order, sig in enumerate_all(g, max_order)
        )
        return _assemble(
            g,
            mode,
            found,
            ceiling_hit=max_order < hurwitz_ceiling(g),
            max_order=max_order,
        )

    rows = [r for r in (actions or ()) if r.genus == g]
    if not rows:
        raise CriterionError(f"no action rows for genus {g}")
    found = []
    for r in rows:
        bound = omega(r.order)
        if r.lambda_max is not None:
            bound = min(bound, r.lambda_max)
        found.append(Witness(r.order, r.signature, vcd_weyl(r.signature), bound))
    return _assemble(g, mode, found)


def check_pair_inequality(vcd_wf: int, order: int, epsilon: Fraction | int, g: int | None = None) -> bool:
    """Sufficient condition ``vcd + |F|/2 <= |F| (vcd - epsilon) - 1``, evaluated exactly.

    ``g`` does not enter the inequality; it is accepted so callers can replay
    a case analysis row by row.
    """
    eps = Fraction(epsilon)
    if eps not in (0, Fraction(1, 2), 1):
        raise ValueError(f"epsilon must be 0, 1/2 or 1, got {eps}")
    return vcd_wf + Fraction(order, 2) <= order * (vcd_wf - eps) - 1


class Conclusion(NamedTuple):
    vcd: int
    cd_bounds: tuple[int, int]
    gd_bounds: tuple[int, int]
    equal: bool


def conclude(g: int, report: Optional[CriterionReport] = None) -> Conclusion:
    """Combine ``vcd <= cd_F <= gd_F <= max(3, cd_F)`` with a criterion report.

    For ``g <= 2`` the group is finite and every dimension vanishes; for
    ``g = 3`` it is virtually free (vcd 1) so all three dimensions equal 1.
    """
    if g < 1:
        raise CriterionError(f"genus must be at least 1, got {g}")
    if g <= 2:
        return Conclusion(0, (0, 0), (0, 0), True)
    if g == 3:
        return Conclusion(1, (1, 1), (1, 1), True)
    if report is None:
        raise CriterionError(f"g = {g} needs a criterion report")
    if report.g != g:
        raise CriterionError(f"report is for g = {report.g}, not {g}")
    vcd = vcd_mcg(N(g))
    cd_hi = max(vcd, report.cd_upper)
    gd_hi = max(3, cd_hi)
    equal = cd_hi == vcd and vcd >= 3
    return Conclusion(vcd, (vcd, cd_hi), (vcd, gd_hi), equal)
