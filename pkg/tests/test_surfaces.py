import pytest
from hypothesis import given, strategies as st

from mcgdim.surfaces import (
    Kind,
    N,
    S,
    Surface,
    euler_characteristic,
    is_hyperbolic,
    known_dimension_bounds,
    vcd_mcg,
    vcd_pure_mcg,
)


# Branch oracle: every printed formula as its own guarded case. A surface may
# satisfy several guards at a seam, and then all matching formulas must agree.
ORIENTABLE_BRANCHES = [
    (lambda g, n, b: g == 0 and n + b <= 3, lambda g, n, b: b),
    (lambda g, n, b: g == 0 and n + b >= 3, lambda g, n, b: n + 2 * b - 3),
    (lambda g, n, b: g == 1 and n + b == 0, lambda g, n, b: 1 + b),
    (lambda g, n, b: g == 1 and n + b >= 1, lambda g, n, b: n + 2 * b),
    (lambda g, n, b: g >= 2 and n + b == 0, lambda g, n, b: 4 * g - 5),
    (lambda g, n, b: g >= 2 and n + b >= 1, lambda g, n, b: 4 * g + n + 2 * b - 4),
]
NON_ORIENTABLE_BRANCHES = [
    (lambda g, n, b: g == 1 and n + b <= 2, lambda g, n, b: b),
    (lambda g, n, b: g == 1 and n + b >= 3, lambda g, n, b: n + 2 * b - 2),
    (lambda g, n, b: g == 2, lambda g, n, b: n + 2 * b),
    (lambda g, n, b: g >= 3 and n + b == 0, lambda g, n, b: 2 * g - 5),
    (lambda g, n, b: g >= 3 and n + b >= 1, lambda g, n, b: 2 * g + n + 2 * b - 4),
]

# Closed-boundary tables, in terms of g and n only.
IVANOV_ORIENTABLE = [
    (lambda g, n: g == 0 and n <= 3, lambda g, n: 0),
    (lambda g, n: g == 0 and n >= 3, lambda g, n: n - 3),
    (lambda g, n: g == 1 and n == 0, lambda g, n: 1),
    (lambda g, n: g == 1 and n >= 1, lambda g, n: n),
    (lambda g, n: g >= 2 and n == 0, lambda g, n: 4 * g - 5),
    (lambda g, n: g >= 2 and n >= 1, lambda g, n: 4 * g + n - 4),
]
IVANOV_NON_ORIENTABLE = [
    (lambda g, n: g == 1 and n <= 2, lambda g, n: 0),
    (lambda g, n: g == 1 and n >= 3, lambda g, n: n - 2),
    (lambda g, n: g == 2, lambda g, n: n),
    (lambda g, n: g >= 3 and n == 0, lambda g, n: 2 * g - 5),
    (lambda g, n: g >= 3 and n >= 1, lambda g, n: 2 * g + n - 4),
]


def oracle_values(branches, *args):
    return {f(*args) for guard, f in branches if guard(*args)}


def test_branch_audit_grid():
    for g in range(0, 13):
        for n in range(0, 9):
            for b in range(0, 5):
                vals = oracle_values(ORIENTABLE_BRANCHES, g, n, b)
                assert len(vals) == 1, (g, n, b, vals)
                assert vcd_mcg(S(g, n, b)) == vals.pop()
                if g >= 1:
                    vals = oracle_values(NON_ORIENTABLE_BRANCHES, g, n, b)
                    assert len(vals) == 1, (g, n, b, vals)
                    assert vcd_mcg(N(g, n, b)) == vals.pop()


def test_closed_tables_reduce():
    for g in range(0, 21):
        for n in range(0, 21):
            (v,) = oracle_values(IVANOV_ORIENTABLE, g, n)
            assert vcd_mcg(S(g, n)) == v
            if g >= 1:
                (v,) = oracle_values(IVANOV_NON_ORIENTABLE, g, n)
                assert vcd_mcg(N(g, n)) == v


@pytest.mark.parametrize(
    "surface, expected",
    [
        (N(6), 7),
        (N(4), 3),
        (N(5), 5),
        (S(0, 3), 0),
        (N(3, 0, 1), 4),
        (N(1, 3), 1),
        (S(1), 1),
    ],
)
def test_vcd_pinned(surface, expected):
    assert vcd_mcg(surface) == expected


@pytest.mark.parametrize("surface, expected", [(N(6, 2), 10), (N(2), 0), (N(2, 1), 1)])
def test_vcd_pure(surface, expected):
    assert vcd_pure_mcg(surface) == expected


def test_seams():
    for n in range(4):
        assert vcd_mcg(S(0, n, 3 - n)) == 3 - n
    for n in range(3):
        b = 2 - n
        assert vcd_mcg(N(1, n, b)) == b


@pytest.mark.parametrize(
    "surface, chi",
    [(N(6), -4), (S(0), 2), (N(1, 1, 1), -1), (S(2), -2), (N(3), -1)],
)
def test_euler(surface, chi):
    assert euler_characteristic(surface) == chi


@pytest.mark.parametrize(
    "surface, expected",
    [(N(3), True), (N(1, 0, 1), False), (S(1), False), (S(0, 3), True)],
)
def test_hyperbolic(surface, expected):
    assert is_hyperbolic(surface) is expected


@pytest.mark.parametrize(
    "surface, expected",
    [
        (N(7), (9, 9, True)),
        (N(4), (3, 6, False)),
        (N(5), (5, 6, False)),
        (N(6), (7, 7, True)),
        (N(4, 2), (6, 9, False)),
        (N(5, 1), (7, 8, False)),
        (N(4, 0, 1), (6, 6, True)),
        (S(3), (7, 7, True)),
    ],
)
def test_known_bounds(surface, expected):
    assert tuple(known_dimension_bounds(surface)) == expected


def test_validation():
    with pytest.raises(ValueError):
        N(0)
    with pytest.raises(ValueError):
        S(1, -1)
    with pytest.raises(TypeError):
        Surface("N", 3)
    with pytest.raises(TypeError):
        S(True)
    with pytest.raises(TypeError):
        vcd_mcg((3, 0, 0))


def test_str():
    assert str(N(6)) == "N:6,0,0"
    assert str(S(0, 3, 1)) == "S:0,3,1"


surfaces = st.builds(
    lambda orient, g, n, b: Surface(Kind.ORIENTABLE if orient else Kind.NON_ORIENTABLE, g + (0 if orient else 1), n, b),
    st.booleans(),
    st.integers(0, 40),
    st.integers(0, 40),
    st.integers(0, 40),
)


@given(surfaces)
def test_vcd_nonnegative(s):
    assert vcd_mcg(s) >= 0


@given(surfaces)
def test_chi_steps(s):
    chi = euler_characteristic(s)
    more_n = Surface(s.kind, s.genus, s.punctures + 1, s.boundaries)
    more_b = Surface(s.kind, s.genus, s.punctures, s.boundaries + 1)
    assert euler_characteristic(more_n) == chi - 1
    assert euler_characteristic(more_b) == chi - 1
    assert is_hyperbolic(s) == (chi < 0)
