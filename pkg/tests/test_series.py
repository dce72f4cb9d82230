import pytest

from keyseries.permutation import Permutation, all_permutations, parse_permutation
from keyseries.poly import SparsePoly, pi_word, x_exps
from keyseries.series import (
    check_piiKw,
    check_propgen,
    denominator_factors,
    key_by_composition,
    key_polynomial,
    lascoux_linear_part,
    lascoux_polynomial,
    numerator_P,
    numerator_P_along,
    partitions,
    series_Kw_direct,
    series_inverse_product,
    suite_formofkw,
    suite_pxiw1,
    t_exps,
    verify_form,
)

P31425 = SparsePoly.parse(
    "1 - x1*x2*x3*T1*T2 - x1*x2*x3*x4*T1*T3 - x1^2*x2*x3*x4*T2*T3"
    " + x1^2*x2^2*x3*x4*T1*T2*T3 + x1^2*x2*x3^2*x4*T1*T2*T3"
)
P14253 = SparsePoly.parse(
    "1 - x1^2*x2*x3*x4*T2*T3 - x1^2*x2*x3*x4*x5*T2*T4 - x1^2*x2^2*x3*x4*x5*T3*T4"
    " + x1^3*x2^2*x3^2*x4*x5*T2*T3*T4 + x1^3*x2^2*x3*x4^2*x5*T2*T3*T4"
)
P4123_CUBIC = SparsePoly.parse(
    "x1*x2*x3*x4*T1^2*T2 + x1^2*x2*x3*x4*T1*T2^2 + x1^2*x2^2*x3*x4*T1*T2*T3"
    " + x1^2*x2*x3^2*x4*T1*T2*T3 + x1^2*x2*x3*x4^2*T1*T2*T3"
)


def test_partition_helpers():
    assert t_exps((4, 2)) == (2, 2)
    assert t_exps((3, 3, 1)) == (0, 2, 1)
    assert t_exps(()) == ()
    assert (2, 2) in set(partitions(4, 4))
    assert all(a >= b for lam in partitions(4, 3) for a, b in zip(lam, lam[1:]))


def test_key_polynomial_basics():
    assert key_polynomial((3,), Permutation.identity(1)).to_text() == "x1^3"
    assert key_polynomial(
        (2, 1), Permutation.identity(2)
    ) == SparsePoly.parse("x1^2*x2")
    assert key_by_composition((0, 1)).to_text() == "x1 + x2"
    assert key_by_composition((1, 0, 2)) == key_polynomial(
        (2, 1), parse_permutation("312")
    )


def test_key_polynomial_schur_at_longest():
    got = key_polynomial((2, 1), Permutation.longest(3))
    assert got == SparsePoly.parse(
        "x1^2*x2 + x1^2*x3 + x1*x2^2 + 2*x1*x2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2"
    )


def test_worked_coefficient():
    poly = key_polynomial((4, 2), parse_permutation("321"))
    assert poly.coefficient(x=(2, 2, 2)) == 3


def test_key_stable_under_embedding():
    for lam in ((2,), (2, 1), (3, 1)):
        a = key_polynomial(lam, parse_permutation("321"))
        b = key_polynomial(lam, parse_permutation("3214"))
        assert a == b


def test_numerator_trivial_cases():
    for text in ("12345", "21345", "13245", "12435", "12354",
                 "21435", "21354", "13254"):
        assert numerator_P(parse_permutation(text)) == SparsePoly.one()
    for i in range(1, 5):
        w = Permutation.identity(i + 1).left_mul_s(i)
        assert numerator_P(w) == SparsePoly.one()


def test_numerator_length_two_adjacent():
    expected = SparsePoly.parse("1 - x1*x2*x3*T1*T2")
    for text in ("23145", "23154", "31245", "31254", "32145", "32154"):
        assert numerator_P(parse_permutation(text)) == expected
    expected23 = SparsePoly.parse("1 - x1^2*x2*x3*x4*T2*T3")
    for text in ("13425", "14235", "14325"):
        assert numerator_P(parse_permutation(text)) == expected23
    expected34 = SparsePoly.parse("1 - x1^2*x2^2*x3*x4*x5*T3*T4")
    for text in ("12453", "12534", "12543"):
        assert numerator_P(parse_permutation(text)) == expected34


def test_numerator_golden_31425():
    assert numerator_P(parse_permutation("31425")) == P31425


def test_numerator_golden_14253():
    assert numerator_P(parse_permutation("14253")) == P14253


def test_numerator_4123_cubic_slice():
    assert numerator_P(parse_permutation("4123")).t_slice(3) == P4123_CUBIC


def test_graded_slices_conventions():
    for text in ("31425", "4123", "42531"):
        p = numerator_P(parse_permutation(text), tmax=3)
        assert p.t_slice(0) == SparsePoly.one()
        assert p.t_slice(1) == SparsePoly.zero()
    assert P31425.t_slice(2) == SparsePoly.parse(
        "-x1*x2*x3*T1*T2 - x1*x2*x3*x4*T1*T3 - x1^2*x2*x3*x4*T2*T3"
    )


def test_numerator_word_independence():
    for w in all_permutations(4):
        first, second = w.reduced_word(), w.reduced_word_alt()
        if first == second:
            continue
        assert numerator_P_along(first) == numerator_P_along(second)


def test_truncation_commutes_with_induction():
    for text in ("31425", "4123", "2413"):
        w = parse_permutation(text)
        assert numerator_P(w, tmax=2) == numerator_P(w).t_truncate(2)


def test_identity_series():
    got = series_Kw_direct(Permutation.identity(2), 2, 2)
    expected = SparsePoly.parse(
        "1 + x1*T1 + x1*x2*T2 + x1^2*T1^2 + x1^2*x2*T1*T2 + x1^2*x2^2*T2^2"
    )
    assert got == expected


def test_denominator_factor_count():
    w = parse_permutation("42531")
    factors = denominator_factors(w, 5)
    from keyseries.bseq import enum_A
    assert len(factors) == sum(len(enum_A(w, l)) for l in range(1, 6))


def test_series_inverse_product_is_inverse():
    monomials = [
        SparsePoly.x_var(1) * SparsePoly.t_block(1),
        SparsePoly.x_var(2) * SparsePoly.t_block(2),
    ]
    inv = series_inverse_product(monomials, 4)
    prod = SparsePoly.one()
    for m in monomials:
        prod = prod.mul_trunc(1 - m, 4)
    assert prod.mul_trunc(inv, 4) == SparsePoly.one()


def test_verify_form_small():
    for n, D in ((3, 4), (4, 3)):
        for check in suite_formofkw(n, D, two_words=True):
            assert check.ok, check


def test_verify_form_single():
    w = parse_permutation("42531")
    check = verify_form(w, D=3, words=[w.reduced_word(), w.reduced_word_alt()])
    assert check.ok


def test_verify_form_xi_mode():
    for check in suite_formofkw(3, 3, xi_mode=True, two_words=True):
        assert check.ok, check


def test_pi_transport_on_series():
    for check in check_piiKw(3, 3):
        assert check.ok, check


def test_epsilon_algebra_identity():
    for check in check_propgen(3, 3):
        assert check.ok, check


def test_lascoux_reduces_to_key():
    for w in all_permutations(3):
        for lam in partitions(3, 3):
            L = lascoux_polynomial(lam, w)
            assert L.xi_slice(0) == key_polynomial(lam, w)


def test_lascoux_golden_linear():
    got = lascoux_polynomial((1,), parse_permutation("21"))
    assert got.to_text() == "x1 + x2 + x1*x2*xi"


def test_lascoux_homogeneous_with_negative_xi_degree():
    for w in all_permutations(3):
        for lam in partitions(3, 3):
            weight = sum(lam)
            for (x, _, xi), _c in lascoux_polynomial(lam, w).terms.items():
                assert sum(x) - xi == weight


def test_xi_linear_slice_closed_form():
    for check in suite_pxiw1(4):
        assert check.ok, check


def test_xi_linear_slice_shape():
    p = lascoux_linear_part(parse_permutation("42531"))
    for (x, t, xi), c in p.terms.items():
        assert xi == 1 and sum(t) == 1 and c >= 1
