from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobsthal3.exact import Mat3, mat_pow
from jacobsthal3.exceptions import BadRange
from jacobsthal3.matrix import (
    MJ_1,
    SEEDS,
    LucasVariant,
    MatFamily,
    MatMethod,
    MatrixTable,
    binet_coefficients,
    lucas_from_jacobsthal,
    lucas_power,
    matrix_range,
    matrix_term,
    mixed_product,
    semigroup_product,
)

from conftest import PRINTED, as_lists, brute_matrices, brute_term, leibniz_det, lmul, lpow

METHODS = list(MatMethod)
I = Mat3.identity()


@pytest.fixture(scope="module")
def brute():
    return {f: brute_matrices(f, -40, 140) for f in ("J", "j")}


@pytest.mark.parametrize("method", METHODS)
def test_examples(method):
    # the printed JM2 has (1,1) = 1; M_J(1)^2 forces 2, see the decisions ledger
    assert matrix_term("J", 2, method) == Mat3([[2, 3, 2], [1, 1, 2], [1, 0, 0]])
    assert matrix_term("J", 0, method) == I
    assert matrix_term("j", 1, method) == Mat3(PRINTED["jM1"])
    m4 = matrix_term("J", 4, method)
    assert m4[0, 0] == 9 and m4[2, 0] == 2
    assert matrix_term("J", -1, method) == MJ_1.inverse()


def test_negative_explicit_uses_dyadic_seeds():
    m = matrix_term("J", -1, MatMethod.EXPLICIT)
    # row pattern with J0=0, J-1=0, J-2=1/2, J-3=-1/4, J-4=-1/8
    half = Fraction(1, 2)
    assert m == Mat3([[0, 1, 0], [0, 0, 1], [half, -half, -half]])


@pytest.mark.parametrize("family", ["J", "j"])
@pytest.mark.parametrize("method", METHODS)
def test_methods_match_brute(brute, family, method):
    for n in range(-40, 141, 3):
        assert as_lists(matrix_term(family, n, method)) == brute[family][n], (family, method, n)


def test_power_is_power_of_seed():
    for n in range(0, 12):
        assert as_lists(matrix_term("J", n, MatMethod.POWER)) == lpow(PRINTED["JM1"], n)


@given(st.integers(-32, 512))
@settings(max_examples=60, deadline=None)
def test_four_methods_agree(n):
    for family in ("J", "j"):
        values = {m: matrix_term(family, n, m) for m in METHODS}
        assert len(set(values.values())) == 1, (family, n)


def test_default_method_switches():
    assert matrix_term("J", 65) == matrix_term("J", 65, MatMethod.EXPLICIT)
    assert matrix_term("J", -65) == matrix_term("J", -65, MatMethod.RECURRENCE)


def test_entries_follow_scalar_pattern():
    for fam, seq in (("J", "J3"), ("j", "j3")):
        for n in range(-10, 30):
            a = lambda k: brute_term(seq, k)  # noqa: E731
            want = [
                [a(n + 1), a(n) + 2 * a(n - 1), 2 * a(n)],
                [a(n), a(n - 1) + 2 * a(n - 2), 2 * a(n - 1)],
                [a(n - 1), a(n - 2) + 2 * a(n - 3), 2 * a(n - 2)],
            ]
            assert as_lists(matrix_term(fam, n)) == want


def test_row_shift_structure():
    for fam in ("J", "j"):
        for n in range(-10, 40):
            a, b = matrix_term(fam, n + 1), matrix_term(fam, n)
            assert a.rows[1:] == b.rows[:2]


@pytest.mark.parametrize("n", list(range(-32, 40)) + [100, 257, 512])
def test_det_is_power_of_two(n):
    m = matrix_term("J", n)
    assert m.det() == Fraction(2) ** n
    if abs(n) < 20:
        assert leibniz_det(as_lists(m)) == Fraction(2) ** n


def test_seed_determinants():
    assert leibniz_det(PRINTED["jM0"]) == SEEDS[MatFamily.Mj][0].det()


@given(st.integers(-40, 80), st.integers(-40, 80))
@settings(max_examples=50, deadline=None)
def test_semigroup_and_commutativity(n, m):
    assert semigroup_product(n, m) == matrix_term("J", n + m)
    a, b = matrix_term("j", n), matrix_term("J", m)
    assert a @ b == b @ a


def test_semigroup_examples():
    assert semigroup_product(0, 7) == matrix_term("J", 7)
    # corrected JM2, as in test_examples
    assert semigroup_product(1, 1) == Mat3([[2, 3, 2], [1, 1, 2], [1, 0, 0]])
    assert semigroup_product(3, -3) == I


def test_mixed_product_examples():
    assert mixed_product(0) == Mat3(PRINTED["jM1"])
    assert mixed_product(1) == Mat3(PRINTED["jM2"])
    assert mixed_product(3)[0, 0] == 37
    for n in range(0, 30):
        assert as_lists(mixed_product(n)) == lmul(PRINTED["jM1"], lpow(PRINTED["JM1"], n))
    for n in range(-10, 0):
        assert mixed_product(n) == matrix_term("j", n + 1)


@pytest.mark.parametrize("variant", list(LucasVariant))
def test_lucas_from_jacobsthal(variant):
    assert lucas_from_jacobsthal(0, LucasVariant.SHIFT4) == Mat3(PRINTED["jM0"])
    assert lucas_from_jacobsthal(1, LucasVariant.SHIFT4) == Mat3(PRINTED["jM1"])
    assert lucas_from_jacobsthal(2, LucasVariant.SHIFT2) == Mat3(PRINTED["jM2"])
    for n in range(-20, 60):
        assert lucas_from_jacobsthal(n, variant) == matrix_term("j", n)


def test_lucas_power_examples():
    assert lucas_power(5, 0) == I
    sq = lucas_power(1, 2)
    assert sq == Mat3(lmul(PRINTED["jM2"], PRINTED["jM2"]))
    assert sq[0, 0] == 145
    assert lucas_power(0, 3) == Mat3(lpow(PRINTED["jM1"], 3))
    with pytest.raises(ValueError):
        lucas_power(1, -1)


@pytest.mark.parametrize("m", range(0, 9))
def test_lucas_power_law(m):
    for n in range(-6, 12):
        assert lucas_power(n, m) == mat_pow(SEEDS[MatFamily.Mj][1], m) @ matrix_term("J", m * n)


def test_binet_coefficients_sum_to_seed():
    for fam in MatFamily:
        c1, c2, c3 = binet_coefficients(fam)
        assert (c1 + c2 + c3).to_mat3() == SEEDS[fam][0]
        assert c2.conj() == c3


def test_tables():
    t = MatrixTable("j")
    assert t[5] == matrix_term("j", 5)
    assert t[-5] == matrix_term("j", -5)
    assert matrix_range("J", -3, 3) == [matrix_term("J", n) for n in range(-3, 4)]
    with pytest.raises(BadRange):
        matrix_range("J", 1, 0)


def test_parse():
    assert MatFamily.parse("J") is MatFamily.MJ
    assert MatFamily.parse("j") is MatFamily.Mj
    assert MatMethod.parse("binet") is MatMethod.BINET
    with pytest.raises(ValueError):
        MatMethod.parse("magic")
