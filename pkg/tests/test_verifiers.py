from fractions import Fraction

import pytest

from mcgdim.groups import GroupError, cyclic, dihedral, symmetric
from mcgdim.verifiers import (
    ab_holds,
    branch_minimizers,
    deficiency_table,
    min_positive_deficiency,
    run_lemma_suite,
    split_ab_exceptions,
    standard_family,
    verify_lambda_bounds,
    verify_lemma_ab,
)

HALF = Fraction(1, 2)


def integer_oracle(two_eps, a_max, b_max):
    # doubled form: 2a + b <= 2ab - b*two_eps - 2
    return {
        (a, b)
        for a in range(1, a_max + 1)
        for b in range(2, b_max + 1)
        if 2 * a + b > 2 * a * b - b * two_eps - 2
    }


@pytest.mark.parametrize("eps, two_eps", [(0, 0), (HALF, 1), (1, 2)])
def test_ab_matches_integer_oracle(eps, two_eps):
    assert verify_lemma_ab(eps, 50, 50) == integer_oracle(two_eps, 50, 50)


def test_ab_exception_sets():
    fam = {(1, b) for b in range(2, 51)}
    assert verify_lemma_ab(0, 50, 50) == {(1, 2), (1, 3)}
    assert verify_lemma_ab(HALF, 50, 50) == fam | {(2, 2)}
    assert verify_lemma_ab(1, 50, 50) == fam | {(2, 2), (2, 3), (2, 4), (2, 5), (3, 2)}


@pytest.mark.parametrize("eps", [0, HALF, 1])
def test_ab_window_stable(eps):
    small = split_ab_exceptions(verify_lemma_ab(eps, 20, 20), 20)
    large = split_ab_exceptions(verify_lemma_ab(eps, 50, 50), 50)
    assert small == large


def test_ab_split():
    got = split_ab_exceptions(verify_lemma_ab(1, 50, 50), 50)
    assert got.a_equals_one
    assert got.sporadic == {(2, 2), (2, 3), (2, 4), (2, 5), (3, 2)}
    got = split_ab_exceptions(verify_lemma_ab(0, 50, 50), 50)
    assert not got.a_equals_one and got.sporadic == {(1, 2), (1, 3)}


def test_ab_errors():
    with pytest.raises(ValueError):
        verify_lemma_ab(Fraction(1, 3))
    with pytest.raises(ValueError):
        verify_lemma_ab(0, 4, 50)
    assert ab_holds(2, 2, 0) and not ab_holds(1, 2, 0)


def brute_deficiency(limit, two_equal):
    best, wit = None, []
    for q in range(2, limit + 1):
        for r in range(q, limit + 1):
            for s in range(r, limit + 1):
                if two_equal and not (q == r or r == s):
                    continue
                k = 1 - Fraction(1, q) - Fraction(1, r) - Fraction(1, s)
                if k <= 0:
                    continue
                if best is None or k < best:
                    best, wit = k, [(q, r, s)]
                elif k == best:
                    wit.append((q, r, s))
    return best, tuple(wit)


def test_deficiency_examples():
    assert min_positive_deficiency(100, False) == (Fraction(1, 42), ((2, 3, 7),))
    assert min_positive_deficiency(100, True) == (Fraction(1, 12), ((3, 3, 4),))
    assert min_positive_deficiency(10, False) == (Fraction(1, 42), ((2, 3, 7),))


@pytest.mark.parametrize("two_equal", [False, True])
def test_deficiency_brute(two_equal):
    assert tuple(min_positive_deficiency(40, two_equal)) == brute_deficiency(40, two_equal)


@pytest.mark.parametrize("bound", [7, 8, 13, 50, 200])
def test_deficiency_bound_independent(bound):
    assert min_positive_deficiency(bound) == min_positive_deficiency(100)
    assert min_positive_deficiency(bound, True) == min_positive_deficiency(100, True)


def test_deficiency_bound_too_small():
    with pytest.raises(ValueError):
        min_positive_deficiency(6)


def test_candidate_list():
    assert branch_minimizers(100) == [(2, 3, 7), (2, 4, 5), (3, 3, 4), (3, 4, 4)]
    table = deficiency_table(30)
    assert table[(2, 4)] == (5, Fraction(1, 20))
    assert table[(3, 4)] == (4, Fraction(1, 6))
    # the remaining branches cannot beat these
    assert all(k >= Fraction(1, 10) for (q, r), (_, k) in table.items() if r >= 5)
    assert all(k >= Fraction(1, 4) for (q, r), (_, k) in table.items() if q >= 4)
    # (2,3,5) and (2,4,4) are not hyperbolic
    assert 1 - Fraction(1, 2) - Fraction(1, 3) - Fraction(1, 5) < 0
    assert 1 - Fraction(1, 2) - Fraction(1, 4) - Fraction(1, 4) == 0


def test_lambda_audit_family():
    fam = standard_family(200)
    names = {n for n, _ in fam}
    assert {"C64", "D32", "S5", "C2xC2", "C8xS4"} <= names
    assert all(G.order <= 200 for _, G in fam)
    assert verify_lambda_bounds(fam, 200) == []


def test_lambda_audit_slices():
    assert verify_lambda_bounds([(f"C{n}", cyclic(n)) for n in range(1, 65)], 200) == []
    assert verify_lambda_bounds([(f"D{n}", dihedral(n)) for n in range(1, 33)], 200) == []
    assert verify_lambda_bounds([("S5", symmetric(5))], 200) == []


def test_lambda_audit_cap():
    with pytest.raises(GroupError):
        verify_lambda_bounds([("S5", symmetric(5))], 100)


def test_suite_passes():
    checks = run_lemma_suite()
    assert len(checks) == 7
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]
