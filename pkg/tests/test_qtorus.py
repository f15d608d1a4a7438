"""Quantum torus arithmetic: Laurent coefficients, X^a calculus, exact division."""

import pytest
from hypothesis import given, settings, strategies as st

from qcluster.errors import NotDivisibleError
from qcluster.qtorus import (
    QLaurent,
    TorusElement,
    exact_div_right,
    q_commutator_exponent,
    skew_value,
    torus_from_json,
    torus_to_json,
    x_pow,
)

# golden A2 skew matrix
L3 = ((0, 1, -1), (-1, 0, 0), (1, 0, 0))
L2 = ((0, 1), (-1, 0))


def lau(*pairs) -> QLaurent:
    return QLaurent.from_pairs(pairs)


class TestQLaurent:
    def test_construction_prunes_zeros(self):
        assert lau((0, 1), (1, 0)) == QLaurent.one()
        assert lau() == QLaurent.zero()
        assert QLaurent.zero().is_zero()

    def test_arithmetic(self):
        v = QLaurent.v_power(1)
        assert (v + 1) * (v - 1) == QLaurent.v_power(2) - 1
        assert v * v == QLaurent.v_power(2)
        assert (v + 1) - v == QLaurent.one()
        assert -v == QLaurent.v_power(1) * (-1)

    def test_shift(self):
        p = lau((0, 2), (3, 5))
        assert p.shift(-3) == lau((-3, 2), (0, 5))
        assert p.shift(0) is p

    def test_pairs_sorted(self):
        p = lau((5, 1), (-2, 4))
        assert p.pairs() == ((-2, 4), (5, 1))

    def test_positivity(self):
        assert lau((0, 1), (2, 3)).is_positive()
        assert not lau((0, 1), (2, -3)).is_positive()
        assert QLaurent.zero().is_positive()

    def test_divide_exact(self):
        p = (QLaurent.v_power(1) + 1) * (QLaurent.v_power(-1) + 3)
        assert p.divide_exact(QLaurent.v_power(1) + 1) == QLaurent.v_power(-1) + 3
        assert (QLaurent.v_power(1) + 1).divide_exact(lau((0, 2))) is None
        assert lau((0, 2), (1, 2)).divide_exact(lau((0, 2))) == QLaurent.v_power(1) + 1

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QLaurent.one().divide_exact(QLaurent.zero())


@given(
    st.lists(st.tuples(st.integers(-4, 4), st.integers(-9, 9)), max_size=5),
    st.lists(st.tuples(st.integers(-4, 4), st.integers(-9, 9)), max_size=5),
)
def test_laurent_division_round_trip(a, b):
    p, q = QLaurent.from_pairs(a), QLaurent.from_pairs(b)
    if q.is_zero():
        return
    prod = p * q
    assert prod.divide_exact(q) == p


def test_skew_value():
    assert skew_value(L3, (1, 0, 0), (0, 1, 0)) == 1
    assert skew_value(L3, (0, 1, 0), (1, 0, 0)) == -1
    assert skew_value(L3, (1, 1, 1), (1, 1, 1)) == 0


def test_x_pow_product_collects_v_prefactor():
    x1 = x_pow(L3, (1, 0, 0))
    x2 = x_pow(L3, (0, 1, 0))
    prod = x1 * x2
    assert prod.support() == ((1, 1, 0),)
    assert prod.coefficient((1, 1, 0)) == QLaurent.v_power(1)
    # reversed order picks up the opposite power
    assert (x2 * x1).coefficient((1, 1, 0)) == QLaurent.v_power(-1)


def test_q_commutation_of_monomials():
    a, b = (2, 1, 0), (0, 1, 3)
    lhs = x_pow(L3, a) * x_pow(L3, b)
    rhs = x_pow(L3, b) * x_pow(L3, a)
    n = q_commutator_exponent(L3, a, b)
    assert n == 2 * skew_value(L3, a, b)
    assert lhs == TorusElement.one(L3) * QLaurent.v_power(n) * rhs


def test_mixed_torus_operations_rejected():
    with pytest.raises(ValueError):
        x_pow(L3, (1, 0, 0)) + x_pow(L2 , (1, 0))
    with pytest.raises(ValueError):
        x_pow(L2, (1, 0)) * x_pow(((0, 2), (-2, 0)), (1, 0))


def test_x_pow_dimension_check():
    with pytest.raises(ValueError):
        x_pow(L3, (1, 0))


def _random_element(rng, L, n_terms=3):
    terms = {}
    for _ in range(rng.randint(0, n_terms)):
        e = tuple(rng.randint(-3, 3) for _ in L)
        c = QLaurent.from_pairs([(rng.randint(-3, 3), rng.randint(-4, 4)) for _ in range(2)])
        if not c.is_zero():
            terms[e] = c
    total = TorusElement.zero(L)
    for e, c in terms.items():
        total = total + x_pow(L, e) * c
    return total


def test_associativity_and_distributivity_bulk():
    import random

    rng = random.Random(97)
    for _ in range(300):
        p = _random_element(rng, L3)
        q = _random_element(rng, L3)
        r = _random_element(rng, L3)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_power():
    p = x_pow(L2, (1, 0)) + x_pow(L2, (0, 1))
    assert p ** 0 == TorusElement.one(L2)
    assert p ** 3 == p * p * p
    with pytest.raises(ValueError):
        p ** -1


class TestExactDivision:
    def test_monomials_always_divide(self):
        # X^{e1} / X^{e2} lives in the torus: X^{e1-e2} up to a v power
        p = x_pow(L3, (1, 0, 0))
        q = x_pow(L3, (0, 1, 0))
        r = exact_div_right(p, q)
        assert r * q == p
        assert r.support() == ((1, -1, 0),)

    def test_golden_exchange_division(self):
        # v*X^{(0,1,0)} + v^{-1}*X^{(0,0,1)} divided by X^{(1,0,0)}
        num = x_pow(L3, (0, 1, 0)) * QLaurent.v_power(1) + x_pow(L3, (0, 0, 1)) * QLaurent.v_power(-1)
        quot = exact_div_right(num, x_pow(L3, (1, 0, 0)))
        assert quot * x_pow(L3, (1, 0, 0)) == num
        assert set(quot.support()) == {(-1, 1, 0), (-1, 0, 1)}

    def test_not_divisible_by_support(self):
        one = TorusElement.one(L2)
        x = x_pow(L2, (1, 0))
        with pytest.raises(NotDivisibleError):
            exact_div_right(one + x, one + x + x * x)

    def test_not_divisible_by_coefficient(self):
        one = TorusElement.one(L2)
        x = x_pow(L2, (1, 0))
        with pytest.raises(NotDivisibleError):
            exact_div_right(one + x, (one + x) * lau((0, 2)))

    def test_zero_dividend(self):
        assert exact_div_right(TorusElement.zero(L2), x_pow(L2, (1, 1))).is_zero()

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div_right(x_pow(L2, (1, 1)), TorusElement.zero(L2))

    def test_round_trip_bulk(self):
        import random

        rng = random.Random(1291)
        done = 0
        while done < 300:
            p = _random_element(rng, L2)
            q = _random_element(rng, L2)
            if q.is_zero():
                continue
            assert exact_div_right(p * q, q) == p
            done += 1


@settings(max_examples=60)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_division_of_binomial_products(a1, a2, b1, b2):
    p = x_pow(L2, (a1, a2)) + x_pow(L2, (b1, b2))
    q = x_pow(L2, (1, 1)) + x_pow(L2, (0, 2)) * QLaurent.v_power(1)
    assert exact_div_right(p * q, q) == p


def test_serialization_round_trip():
    p = x_pow(L3, (1, -2, 0)) * (QLaurent.v_power(2) + 3) + x_pow(L3, (0, 0, 5))
    data = torus_to_json(p)
    assert torus_from_json(L3, data) == p
    # canonical: exponents sorted
    assert [tuple(t["exp"]) for t in data] == sorted(tuple(t["exp"]) for t in data)


def test_deserialization_rejects_duplicate_exponents():
    data = [
        {"exp": [1, 0, 0], "coef": [[0, 1]]},
        {"exp": [1, 0, 0], "coef": [[1, 1]]},
    ]
    with pytest.raises(ValueError):
        torus_from_json(L3, data)


def test_element_positivity_and_support():
    p = x_pow(L3, (1, 0, 0)) + x_pow(L3, (0, 1, 0))
    assert p.is_positive()
    assert not (p - 2 * x_pow(L3, (0, 1, 0))).is_positive()
    assert p.n_terms() == 2
    assert set(p.support()) == {(1, 0, 0), (0, 1, 0)}
