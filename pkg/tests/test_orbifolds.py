from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mcgdim.orbifolds import (
    BoundaryComponent,
    OrbifoldSignature,
    canonical_corners,
    ef_cf,
    orbifold_euler,
    rh_order,
    underlying_euler,
    underlying_surface,
    vcd_weyl,
    vcd_weyl_table,
    validate_inequalities,
)
from mcgdim.sigio import parse_signature
from mcgdim.surfaces import N, S, euler_characteristic
from strategies import signatures

F = Fraction


def sig(text):
    return parse_signature(text)


def rational_sum(orders):
    total = F(0)
    for q in orders:
        total += F(q - 1, q)
    return total


@pytest.mark.parametrize(
    "text, E, C",
    [
        ("(0; +; [2]; {-})", F(1, 2), F(0)),
        ("(0; +; [-]; {(2,4,6)})", F(0), F(25, 12)),
        ("(0; +; [3,3,4]; {-})", F(25, 12), F(0)),
        ("(1; -; [3,5]; {(), (2,2)})", F(22, 15), F(1)),
    ],
)
def test_ef_cf(text, E, C):
    s = sig(text)
    assert ef_cf(s) == (E, C)
    assert ef_cf(s).E_F == rational_sum(s.elliptic)
    assert ef_cf(s).C_F == rational_sum(s.corner_orders)


@pytest.mark.parametrize(
    "text, chi",
    [
        ("(0; +; [-]; {(2,4,6)})", F(-1, 24)),
        ("(1; +; [-]; {-})", F(0)),
        ("(1; -; [2]; {()})", F(-1, 2)),
        ("(0; +; [-]; {(2,4,5)})", F(-1, 40)),
    ],
)
def test_orbifold_euler(text, chi):
    assert orbifold_euler(sig(text)) == chi


def test_rh_fixtures():
    assert rh_order(sig("(0; +; [-]; {(2,4,6)})"), 4) == 48
    assert rh_order(sig("(0; +; [-]; {(2,4,5)})"), 5) == 120
    assert rh_order(sig("(1; +; [-]; {-})"), 5) is None
    assert rh_order(sig("(0; +; [2,3]; {-})"), 5) is None
    with pytest.raises(ValueError):
        rh_order(sig("(3; -; [-]; {-})"), 2)


def test_rh_non_integer():
    # chi = 2 - 4/2 - 2/3 = -2/3
    s = sig("(0; +; [2,2,2,2,3]; {-})")
    assert orbifold_euler(s) == F(-2, 3)
    assert rh_order(s, 3) is None
    assert rh_order(s, 4) == 3
    assert rh_order(sig("(0; +; [-]; {(2,4,6)})"), 3) == 24
    assert rh_order(sig("(0; +; [-]; {(2,3,7)})"), 4) == 168
    assert rh_order(sig("(0; +; [5]; {(2)})"), 4) == 40


@pytest.mark.parametrize(
    "text, surface",
    [
        ("(0; +; [-]; {(2,4,6)})", S(0, 0, 1)),
        ("(1; -; [3,5]; {(),()})", N(1, 4, 0)),
        ("(2; -; [-]; {-})", N(2)),
    ],
)
def test_underlying_surface(text, surface):
    assert underlying_surface(sig(text)) == surface


@pytest.mark.parametrize(
    "text, v",
    [
        ("(0; +; [-]; {(2,4,6)})", 1),
        ("(3; -; [-]; {-})", 1),
        ("(0; +; [2,2,2,2]; {-})", 1),
        ("(0; +; [-]; {(2,4,5)})", 1),
    ],
)
def test_vcd_weyl(text, v):
    assert vcd_weyl(sig(text)) == v
    assert vcd_weyl_table(sig(text)) == v


def _build(orientable, genus, e, bm, bc, c):
    # c corners spread over bc boundaries, at least one each
    per = [1] * bc
    for i in range(c - bc):
        per[i % bc] += 1
    bounds = [BoundaryComponent(())] * bm + [BoundaryComponent((3,) * k) for k in per]
    return OrbifoldSignature(orientable, genus, (2,) * e, tuple(bounds))


def test_weyl_table_exhaustive():
    checked = 0
    for orientable in (True, False):
        for genus in range(0 if orientable else 1, 6):
            for e in range(7):
                for bm in range(5):
                    for bc in range(5 - bm):
                        for c in range(bc, 7):
                            if bc == 0 and c:
                                continue
                            s = _build(orientable, genus, e, bm, bc, c)
                            assert (s.e_F, s.b_m, s.b_c, s.c_F) == (e, bm, bc, c)
                            assert vcd_weyl(s) == vcd_weyl_table(s), s
                            checked += 1
    assert checked > 1000


def test_inequality_examples():
    s = sig("(0; +; [2,2]; {-})")
    assert validate_inequalities(s) and ef_cf(s).E_F == 1
    t = sig("(0; +; [-]; {(7,7)})")
    assert validate_inequalities(t) and ef_cf(t).C_F == F(12, 7)


def test_dihedral_equality():
    assert BoundaryComponent((2, 3, 4)) == BoundaryComponent((4, 3, 2))
    assert BoundaryComponent((2, 3, 4)) == BoundaryComponent((3, 4, 2))
    assert BoundaryComponent((2, 2, 3, 3)) != BoundaryComponent((2, 3, 2, 3))
    assert canonical_corners((5, 2, 7, 3)) == (2, 5, 3, 7)


def test_validation():
    with pytest.raises(ValueError):
        OrbifoldSignature(False, 0)
    with pytest.raises(ValueError):
        OrbifoldSignature(True, 0, (1,))
    with pytest.raises(ValueError):
        BoundaryComponent((2, 1))
    with pytest.raises(ValueError):
        OrbifoldSignature(True, -1)


@given(signatures())
def test_inequalities_hold(s):
    E, C = ef_cf(s)
    assert validate_inequalities(s)
    assert (E == F(s.e_F, 2)) == all(q == 2 for q in s.elliptic)
    assert (C == F(s.c_F, 2)) == all(p == 2 for p in s.corner_orders)


@given(signatures())
def test_derived_counts(s):
    assert s.b == s.b_m + s.b_c
    assert s.c_F == len(s.corner_orders)
    assert s.b_m == sum(1 for b in s.boundaries if not b.corners)


@given(signatures(), st.integers(3, 40))
def test_rh_identity(s, g):
    o = rh_order(s, g)
    if o is not None:
        assert o >= 1
        assert o * orbifold_euler(s) == 2 - g


@given(signatures())
def test_weyl_routes_agree(s):
    assert vcd_weyl(s) == vcd_weyl_table(s)


@given(signatures())
def test_plain_surface_chi(s):
    bare = OrbifoldSignature(s.orientable, s.genus, (), tuple(BoundaryComponent(()) for _ in s.boundaries))
    surf = (S if s.orientable else N)(s.genus, 0, s.b)
    assert orbifold_euler(bare) == underlying_euler(bare) == euler_characteristic(surf)
