"""Small finite groups as Cayley tables, their subgroup lattices and chain lengths."""

from __future__ import annotations

import re
from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from . import _kernels

DEFAULT_CAP = 400


class GroupError(ValueError):
    pass


def omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity (trial division)."""
    if n < 1:
        raise ValueError(f"omega needs a positive integer, got {n}")
    count = 0
    p = 2
    while p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 1 if p == 2 else 2
    return count + (1 if n > 1 else 0)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table; element 0 is the identity."""

    table: tuple[tuple[int, ...], ...]
    name: str = field(default="G", compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def flat(self) -> array:
        return array("i", (x for row in self.table for x in row))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def closure(self, gens: Iterable[int]) -> int:
        return _kernels.subgroup_closure(self.flat, self.order, list(gens))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise GroupError(f"group order {order} exceeds cap {cap}")


def _from_elements(elements: list, mul, name: str) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elements)}
    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    return FiniteGroup(table, name)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation over points ``1..degree`` into a 0-based image tuple.

    Cycles may overlap; they are composed right to left. ``()`` is the identity.
    """
    text = text.strip()
    perm = list(range(degree))
    if not text:
        raise GroupError("empty permutation")
    pos = 0
    cycles = []
    for m in _CYCLE.finditer(text):
        if text[pos : m.start()].strip():
            raise GroupError(f"malformed cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(x) for x in body]
        except ValueError:
            raise GroupError(f"non-integer point in cycle {m.group(0)!r}") from None
        for p in pts:
            if not 1 <= p <= degree:
                raise GroupError(f"point {p} outside 1..{degree}")
        if len(set(pts)) != len(pts):
            raise GroupError(f"repeated point in cycle {m.group(0)!r}")
        cycles.append([p - 1 for p in pts])
    if pos == 0 or text[pos:].strip():
        raise GroupError(f"malformed cycle notation: {text!r}")
    for cyc in reversed(cycles):
        step = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
        perm = [step.get(x, x) for x in perm]
    return tuple(perm)


def split_generators(text: str) -> list[str]:
    """Split ``"(1 2 3), (1 2)"`` or ``"(1 2 3);(1 2)"`` into per-generator strings."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise GroupError(f"unbalanced parentheses in {text!r}")
        if ch in ",;" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise GroupError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return [p for p in (s.strip() for s in parts) if p]


def from_permutations(
    generators: Sequence[str] | str, degree: int, cap: int = DEFAULT_CAP, name: str = ""
) -> FiniteGroup:
    if degree < 1:
        raise GroupError(f"degree must be positive, got {degree}")
    if isinstance(generators, str):
        generators = split_generators(generators)
    gens = [parse_permutation(g, degree) for g in generators]
    identity = tuple(range(degree))
    elements = [identity]
    seen = {identity}
    for e in elements:
        for s in gens:
            p = tuple(s[i] for i in e)
            if p not in seen:
                seen.add(p)
                elements.append(p)
                if len(elements) > cap:
                    raise GroupError(f"group order exceeds cap {cap}")
    # composition: first apply a, then b
    return _from_elements(elements, lambda a, b: tuple(b[i] for i in a), name or "perm")


def cyclic(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n < 1:
        raise GroupError(f"cyclic group needs n >= 1, got {n}")
    _check_cap(n, cap)
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)), f"C{n}")


def dihedral(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Dihedral group of order ``2n``: elements ``r^k s^e`` stored as ``(k, e)``."""
    if n < 1:
        raise GroupError(f"dihedral group needs n >= 1, got {n}")
    _check_cap(2 * n, cap)
    elements = [(k, e) for e in (0, 1) for k in range(n)]

    def mul(a, b):
        (k1, e1), (k2, e2) = a, b
        return ((k1 + (-k2 if e1 else k2)) % n, (e1 + e2) % 2)

    return _from_elements(elements, mul, f"D{n}")


def symmetric(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n < 1:
        raise GroupError(f"symmetric group needs n >= 1, got {n}")
    if n == 1:
        return cyclic(1)
    gens = ["(" + " ".join(str(i) for i in range(1, n + 1)) + ")", "(1 2)"]
    return from_permutations(gens, n, cap, f"S{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_CAP) -> FiniteGroup:
    _check_cap(G.order * H.order, cap)
    m = H.order
    table = tuple(
        tuple(G.table[a // m][c // m] * m + H.table[a % m][c % m] for c in range(G.order * m))
        for a in range(G.order * m)
    )
    return FiniteGroup(table, f"{G.name}x{H.name}")


_SPEC = re.compile(r"^([CDS])(\d+)$")


def from_spec(spec: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build a group from ``C<n>``, ``D<n>``, ``S<n>`` joined by ``x`` for products."""
    parts = [p.strip() for p in spec.split("x")]
    groups = []
    for part in parts:
        m = _SPEC.match(part)
        if not m:
            raise GroupError(f"bad group spec {part!r}; expected C<n>, D<n> or S<n>")
        kind, n = m.group(1), int(m.group(2))
        groups.append({"C": cyclic, "D": dihedral, "S": symmetric}[kind](n, cap))
    out = groups[0]
    for g in groups[1:]:
        out = direct_product(out, g, cap)
    return out


class SubgroupLattice(NamedTuple):
    """All subgroups as element bitmasks, sorted by order, with covering inclusions.

    ``covers[i]`` lists the indices of the maximal subgroups of ``subgroups[i]``.
    """

    subgroups: tuple[int, ...]
    covers: tuple[tuple[int, ...], ...]

    def orders(self) -> list[int]:
        return [bin(m).count("1") for m in self.subgroups]


def subgroup_lattice(G: FiniteGroup, cap: int = DEFAULT_CAP) -> SubgroupLattice:
    _check_cap(G.order, cap)
    subs = _kernels.all_subgroups(G.flat, G.order)
    below: list[list[int]] = []
    for i, h in enumerate(subs):
        inside = [j for j in range(i) if subs[j] & h == subs[j] and subs[j] != h]
        below.append(inside)
    covers = []
    for i, inside in enumerate(below):
        inner = set()
        for j in inside:
            inner.update(below[j])
        covers.append(tuple(j for j in inside if j not in inner))
    return SubgroupLattice(tuple(subs), tuple(covers))


def lambda_exact(G: FiniteGroup, cap: int = DEFAULT_CAP) -> int:
    """Length of the longest strictly increasing subgroup chain ``1 = F_0 < ... < F_i = G``."""
    lat = subgroup_lattice(G, cap)
    best = [0] * len(lat.subgroups)
    for i, below in enumerate(lat.covers):
        if below:
            best[i] = 1 + max(best[j] for j in below)
    return best[-1]


class LambdaBounds(NamedTuple):
    half: Fraction
    log2: int
    omega: int


def lambda_bounds(order: int) -> LambdaBounds:
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    return LambdaBounds(Fraction(order, 2), order.bit_length() - 1, omega(order))
