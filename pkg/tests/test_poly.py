import pytest
from hypothesis import given, settings, strategies as st

from keyseries.permutation import all_permutations
from keyseries.poly import (
    SparsePoly,
    divided_difference,
    pi,
    pi_word,
    pi_xi,
    t_pair,
    x_exps,
    x_multiset,
)

coeffs = st.integers(min_value=-4, max_value=4).filter(bool)
monomials = st.tuples(
    st.lists(st.integers(0, 3), min_size=0, max_size=4).map(tuple),
    st.lists(st.integers(0, 2), min_size=0, max_size=3).map(tuple),
    st.integers(0, 2),
)
polys = st.dictionaries(monomials, coeffs, min_size=1, max_size=6).map(SparsePoly)
letters = st.integers(min_value=1, max_value=3)


def test_exponent_helpers_roundtrip():
    assert x_exps((1, 1, 2, 4)) == (2, 1, 0, 1)
    assert x_multiset((2, 1, 0, 1)) == (1, 1, 2, 4)
    assert t_pair(2, 3) == (0, 1, 1)
    assert t_pair(3, 3) == (0, 0, 2)


def test_constructor_drops_zeros_and_pads():
    p = SparsePoly({((1, 0), (), 0): 2, ((0, 1), (), 0): 0})
    assert p == 2 * SparsePoly.x_var(1)
    assert ((1,), (), 0) in p.terms


def test_arithmetic():
    x1, x2 = SparsePoly.x_var(1), SparsePoly.x_var(2)
    sq = (x1 + x2) ** 2
    assert sq == x1 * x1 + 2 * x1 * x2 + x2 * x2
    assert (sq - sq) == SparsePoly.zero()
    assert not SparsePoly.zero()
    assert 1 - SparsePoly.one() == SparsePoly.zero()


def test_display_order_and_text():
    assert (SparsePoly.x_var(2) + SparsePoly.x_var(1)).to_text() == "x1 + x2"
    assert SparsePoly.one().to_text() == "1"
    assert SparsePoly.zero().to_text() == "0"
    p = 1 - 2 * SparsePoly.x_var(1) * SparsePoly.t_block(2)
    assert p.to_text() == "1 - 2*x1*T2"


def test_slices_partition_the_poly():
    p = (1 + SparsePoly.x_var(1) * SparsePoly.t_block(1)) ** 3
    total = SparsePoly.zero()
    for d in range(p.t_degree() + 1):
        total = total + p.t_slice(d)
    assert total == p
    assert p.t_truncate(1) == p.t_slice(0) + p.t_slice(1)


def test_coefficient_accessors():
    p = 5 * SparsePoly.term(x=(2, 1), t=(0, 1), xi=1)
    assert p.coefficient(x=(2, 1), t=(0, 1), xi=1) == 5
    assert p.coefficient(x=(2, 1), t=(0, 1)) == 0
    assert p.t_coefficient((0, 1)) == 5 * SparsePoly.term(x=(2, 1), xi=1)
    assert p.xi_slice(1) == p


@given(polys)
def test_text_parse_roundtrip(p):
    assert SparsePoly.parse(p.to_text()) == p


@given(polys)
def test_json_roundtrip(p):
    assert SparsePoly.from_json_obj(p.to_json_obj()) == p


@given(polys, letters)
def test_swap_is_involution(p, i):
    assert p.swap_x(i).swap_x(i) == p


@given(polys, letters)
def test_dd_square_zero(p, i):
    assert divided_difference(i, divided_difference(i, p)) == SparsePoly.zero()


@given(polys, letters)
def test_dd_output_symmetric(p, i):
    d = divided_difference(i, p)
    assert d.swap_x(i) == d


@given(polys, letters)
def test_pi_idempotent(p, i):
    q = pi(i, p)
    assert pi(i, q) == q
    assert q.swap_x(i) == q


@given(polys, letters)
def test_pi_xi_idempotent(p, i):
    q = pi_xi(i, p)
    assert pi_xi(i, q) == q


@given(polys, letters)
def test_pi_fixes_symmetric_and_extends_dd(p, i):
    sym = p + p.swap_x(i)
    assert pi(i, sym) == sym
    xi_poly = SparsePoly.x_var(i)
    assert pi(i, p) == divided_difference(i, xi_poly * p)


@given(polys, polys, letters)
def test_dd_leibniz(p, q, i):
    lhs = divided_difference(i, p * q)
    rhs = divided_difference(i, p) * q + p.swap_x(i) * divided_difference(i, q)
    assert lhs == rhs


@pytest.mark.parametrize("op", [divided_difference, pi, pi_xi])
@given(p=polys)
@settings(max_examples=40)
def test_braid_relation(op, p):
    lhs = op(1, op(2, op(1, p)))
    rhs = op(2, op(1, op(2, p)))
    assert lhs == rhs


@pytest.mark.parametrize("op", [divided_difference, pi, pi_xi])
@given(p=polys)
@settings(max_examples=40)
def test_distant_letters_commute(op, p):
    assert op(1, op(3, p)) == op(3, op(1, p))


@given(polys)
@settings(max_examples=30)
def test_word_independence(p):
    for w in all_permutations(4):
        first, second = w.reduced_word(), w.reduced_word_alt()
        if first == second:
            continue
        assert pi_word(first, p) == pi_word(second, p)
        assert pi_word(first, p, xi_mode=True) == pi_word(second, p, xi_mode=True)
