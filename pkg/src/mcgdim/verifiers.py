"""Exhaustive, exact checks of the elementary inequalities the dimension bounds rest on."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .groups import (
    DEFAULT_CAP,
    FiniteGroup,
    GroupError,
    cyclic,
    dihedral,
    direct_product,
    lambda_exact,
    symmetric,
)

EPSILONS = (Fraction(0), Fraction(1, 2), Fraction(1))


def _eps(epsilon) -> Fraction:
    eps = Fraction(epsilon)
    if eps not in EPSILONS:
        raise ValueError(f"epsilon must be 0, 1/2 or 1, got {eps}")
    return eps


def ab_holds(a: int, b: int, epsilon) -> bool:
    """``a + b/2 <= b (a - epsilon) - 1``."""
    return a + Fraction(b, 2) <= b * (a - _eps(epsilon)) - 1


def verify_lemma_ab(epsilon, a_max: int = 50, b_max: int = 50) -> set[tuple[int, int]]:
    """All ``(a, b)`` with ``1 <= a <= a_max``, ``2 <= b <= b_max`` violating the inequality."""
    eps = _eps(epsilon)
    if a_max < 5 or b_max < 5:
        raise ValueError("window must be at least 5 x 5")
    return {
        (a, b)
        for a in range(1, a_max + 1)
        for b in range(2, b_max + 1)
        if not ab_holds(a, b, eps)
    }


class ABExceptions(NamedTuple):
    a_equals_one: bool
    sporadic: frozenset[tuple[int, int]]


def split_ab_exceptions(exceptions: set[tuple[int, int]], b_max: int) -> ABExceptions:
    """Separate the whole column ``a = 1`` (as a family) from the finitely many other pairs."""
    column = {(1, b) for b in range(2, b_max + 1)}
    family = column <= exceptions
    rest = exceptions - column if family else exceptions
    return ABExceptions(family, frozenset(rest))


class Deficiency(NamedTuple):
    k: Fraction
    witnesses: tuple[tuple[int, int, int], ...]


def _smallest_positive(q: int, r: int, bound: int) -> Optional[tuple[int, Fraction]]:
    # k increases with s, so the first positive value is the minimum for (q, r)
    for s in range(r, bound + 1):
        k = 1 - Fraction(1, q) - Fraction(1, r) - Fraction(1, s)
        if k > 0:
            return s, k
    return None


def deficiency_table(bound: int) -> dict[tuple[int, int], tuple[int, Fraction]]:
    """For each ``2 <= q <= r <= bound``: the least ``s >= r`` with positive ``k`` and that ``k``."""
    out = {}
    for q in range(2, bound + 1):
        for r in range(q, bound + 1):
            hit = _smallest_positive(q, r, bound)
            if hit is not None:
                out[(q, r)] = hit
    return out


def min_positive_deficiency(bound: int = 100, require_two_equal: bool = False) -> Deficiency:
    """Least positive ``1 - 1/q - 1/r - 1/s`` over ``2 <= q <= r <= s``.

    Once ``q >= 4`` every positive value is at least 1/4, and for fixed ``q, r``
    only the smallest admissible ``s`` matters, so any ``bound >= 7`` already
    sees the global minimum.
    """
    if bound < 7:
        raise ValueError(f"bound must be at least 7, got {bound}")
    best: Optional[Fraction] = None
    wit: list[tuple[int, int, int]] = []

    def offer(triple: tuple[int, int, int], k: Fraction) -> None:
        nonlocal best, wit
        if k <= 0:
            return
        if best is None or k < best:
            best, wit = k, [triple]
        elif k == best and triple not in wit:
            wit.append(triple)

    if not require_two_equal:
        for (q, r), (s, k) in deficiency_table(bound).items():
            offer((q, r, s), k)
    else:
        for q in range(2, bound + 1):
            # (q, q, s): increasing in s
            hit = _smallest_positive(q, q, bound)
            if hit is not None:
                offer((q, q, hit[0]), hit[1])
            # (q, r, r): increasing in r
            for r in range(q, bound + 1):
                k = 1 - Fraction(1, q) - Fraction(2, r)
                if k > 0:
                    offer((q, r, r), k)
                    break
    assert best is not None
    return Deficiency(best, tuple(sorted(wit)))


class LambdaViolation(NamedTuple):
    name: str
    order: int
    length: int
    reason: str


def lambda_violations(group: FiniteGroup, name: str = "", cap: int = DEFAULT_CAP) -> list[LambdaViolation]:
    n = group.order
    lam = lambda_exact(group, cap)
    out = []
    if Fraction(lam) > Fraction(n, 2):
        out.append(LambdaViolation(name or group.name, n, lam, "length exceeds |F|/2"))
    if 2**lam > n:
        out.append(LambdaViolation(name or group.name, n, lam, "length exceeds log2|F|"))
    return out


def standard_family(cap: int = 200) -> list[tuple[str, FiniteGroup]]:
    """Cyclic groups up to 64, dihedral up to order 64, symmetric up to S_5, and pairwise products."""
    fam: list[tuple[str, FiniteGroup]] = []
    for n in range(1, 65):
        if n <= cap:
            fam.append((f"C{n}", cyclic(n, cap)))
    for n in range(1, 33):
        if 2 * n <= cap:
            fam.append((f"D{n}", dihedral(n, cap)))
    for n in range(1, 6):
        fam.append((f"S{n}", symmetric(n, cap)))
    base = [(f"C{n}", cyclic(n)) for n in range(2, 9)]
    base += [(f"D{n}", dihedral(n)) for n in range(2, 7)]
    base += [("S3", symmetric(3)), ("S4", symmetric(4))]
    for i, (na, a) in enumerate(base):
        for nb, b in base[i:]:
            if a.order * b.order <= cap:
                fam.append((f"{na}x{nb}", direct_product(a, b, cap)))
    return fam


def verify_lambda_bounds(
    family: Iterable[tuple[str, FiniteGroup]] | None = None, cap: int = 200
) -> list[LambdaViolation]:
    if family is None:
        family = standard_family(cap)
    out: list[LambdaViolation] = []
    for name, group in family:
        if group.order > cap:
            raise GroupError(f"{name} has order {group.order}, above cap {cap}")
        out.extend(lambda_violations(group, name, cap))
    return out


def branch_minimizers(bound: int = 100) -> list[tuple[int, int, int]]:
    """Minimizing triple for every branch ``q <= 3``, ``r <= 4``.

    Every other branch has ``k >= 1/10`` (``r >= 5``) or ``k >= 1/4`` (``q >= 4``).
    """
    table = deficiency_table(bound)
    return sorted((q, r, s) for (q, r), (s, _) in table.items() if q <= 3 and r <= 4)


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


_EXPECTED_AB = {
    Fraction(0): (False, frozenset({(1, 2), (1, 3)})),
    Fraction(1, 2): (True, frozenset({(2, 2)})),
    Fraction(1): (True, frozenset({(2, 2), (2, 3), (2, 4), (2, 5), (3, 2)})),
}


def run_lemma_suite(window: int = 50, bound: int = 100, cap: int = 200) -> list[Check]:
    out = []
    for eps, (family, sporadic) in _EXPECTED_AB.items():
        got = split_ab_exceptions(verify_lemma_ab(eps, window, window), window)
        ok = got.a_equals_one == family and got.sporadic == sporadic
        shown = sorted(got.sporadic)
        out.append(Check(f"ab[eps={eps}]", ok, f"(1,b) family={got.a_equals_one} sporadic={shown}"))
    d = min_positive_deficiency(bound, False)
    out.append(Check("deficiency", d == (Fraction(1, 42), ((2, 3, 7),)), f"k={d.k} at {list(d.witnesses)}"))
    d = min_positive_deficiency(bound, True)
    out.append(Check("deficiency[two-equal]", d == (Fraction(1, 12), ((3, 3, 4),)), f"k={d.k} at {list(d.witnesses)}"))
    cands = branch_minimizers(bound)
    expected = [(2, 3, 7), (2, 4, 5), (3, 3, 4), (3, 4, 4)]
    out.append(Check("deficiency[candidates]", cands == expected, f"{cands}"))
    bad = verify_lambda_bounds(None, cap)
    out.append(Check("lambda-bounds", not bad, f"{len(bad)} violations"))
    return out
