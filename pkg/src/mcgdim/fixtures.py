"""Action rows for N_4, N_5 and N_6 restricted by published census facts about group orders.

The census itself is not shipped. Instead every Riemann-Hurwitz signature is
kept unless a recorded order fact rules its group out:

* g = 4, 5: when the quotient is a disc-like orientable orbifold (genus 0,
  ``e_F + b <= 2``) with Weyl vcd 1, the acting group has order below 12 or in
  an explicit list;
* g = 6: no group of order above 160 or equal to 128 acts.

Two actions whose groups are identified (order 48 on N_4 and the symmetric
group S_5 on N_5) carry their exact length.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .enumerator import enumerate_all, hurwitz_ceiling
from .orbifolds import OrbifoldSignature, vcd_weyl
from .sigio import ActionRow, ingest_actions, parse_signature, write_actions

FIXTURE_NAME = "census_order_facts.tsv"


@dataclass(frozen=True)
class OrderFacts:
    max_order: Optional[int] = None
    forbidden: frozenset[int] = frozenset()
    disc_orders: Optional[frozenset[int]] = None
    disc_below: int = 0


ORDER_FACTS = {
    4: OrderFacts(disc_orders=frozenset({12, 16, 24, 48}), disc_below=12),
    5: OrderFacts(disc_orders=frozenset({16, 18, 20, 24, 36, 60, 72, 120}), disc_below=12),
    6: OrderFacts(max_order=160, forbidden=frozenset({128})),
}

KNOWN_LENGTHS = [
    (4, 48, "(0; +; [-]; {(2,4,6)})", 5),
    (5, 120, "(0; +; [-]; {(2,4,5)})", 5),
]


def is_disc_family(sig: OrbifoldSignature) -> bool:
    return sig.orientable and sig.genus == 0 and sig.e_F + sig.b <= 2 and vcd_weyl(sig) == 1


def admitted(g: int, order: int, sig: OrbifoldSignature) -> bool:
    facts = ORDER_FACTS[g]
    if facts.max_order is not None and order > facts.max_order:
        return False
    if order in facts.forbidden:
        return False
    if facts.disc_orders is not None and is_disc_family(sig):
        return order < facts.disc_below or order in facts.disc_orders
    return True


def fixture_rows(g: int) -> list[ActionRow]:
    if g not in ORDER_FACTS:
        raise KeyError(f"no order facts recorded for genus {g}")
    lengths = {
        (gg, order, parse_signature(text)): lam for gg, order, text, lam in KNOWN_LENGTHS
    }
    rows = []
    for order, sig in enumerate_all(g, hurwitz_ceiling(g)):
        if admitted(g, order, sig):
            rows.append(ActionRow(g, order, sig, lengths.get((g, order, sig))))
    return rows


def build_fixture() -> list[ActionRow]:
    rows = []
    for g in sorted(ORDER_FACTS):
        rows.extend(fixture_rows(g))
    return rows


HEADER = """\
Quotient signatures of N_4, N_5, N_6 admitted by recorded group-order facts.
Columns: genus, group order, signature, exact subgroup-chain length (optional).
Generated by mcgdim.fixtures.build_fixture; do not edit by hand."""


def render_fixture() -> str:
    return write_actions(build_fixture(), header=HEADER)


def shipped_fixture_path() -> Path:
    return Path(str(resources.files("mcgdim") / "data" / FIXTURE_NAME))


def load_shipped_fixture() -> list[ActionRow]:
    return ingest_actions(shipped_fixture_path())


if __name__ == "__main__":
    import sys

    sys.stdout.write(render_fixture())
