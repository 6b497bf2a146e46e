"""Tests for exact integer polynomials: arithmetic, ordering, rendering,
parsing, variable swaps, and divided differences."""

from __future__ import annotations

import random

import pytest

from invschub.polynomials import (
    IntPolynomial,
    ONE,
    ZERO,
    constant,
    divided_difference,
    monomial,
    parse_polynomial,
    swap_variables,
    variable,
)


def rand_poly(rng: random.Random, nvars: int = 4, terms: int = 5, maxdeg: int = 3) -> IntPolynomial:
    p = ZERO
    for _ in range(terms):
        exps = tuple(rng.randrange(0, maxdeg + 1) for _ in range(nvars))
        p = p + monomial(exps, rng.randrange(-4, 5))
    return p


def test_zero_and_one():
    assert ZERO.is_zero()
    assert not ONE.is_zero()
    assert ZERO + ONE == ONE
    assert ONE * ZERO == ZERO
    assert constant(0) == ZERO
    assert constant(1) == ONE
    assert str(ZERO) == "0"
    assert str(ONE) == "1"


def test_trailing_zero_exponents_are_normalized():
    assert monomial((1, 0, 0)) == monomial((1,))
    assert monomial((0, 0)) == ONE
    assert variable(3) == monomial((0, 0, 1))


def test_ring_laws_random():
    rng = random.Random(20240817)
    for _ in range(25):
        f = rand_poly(rng)
        g = rand_poly(rng)
        h = rand_poly(rng)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f - f == ZERO
        assert f * ONE == f
        assert f + 0 == f
        assert f * 1 == f
        assert f.scale(-3) == f * constant(-3)


def test_pow():
    x1, x2 = variable(1), variable(2)
    assert (x1 + x2) ** 2 == x1 * x1 + x1 * x2 * 2 + x2 * x2
    assert (x1 + x2) ** 0 == ONE
    with pytest.raises(ValueError):
        (x1 + x2) ** -1


def test_leading_term_graded_lex():
    # Total degree dominates; ties break lexicographically with x1 largest.
    f = monomial((1, 1)) + monomial((3,)) + monomial((0, 2))
    assert f.leading_term() == ((3,), 1)
    g = monomial((1, 1)) + monomial((0, 2))
    assert g.leading_term() == ((1, 1), 1)
    assert (variable(2) + variable(3)).leading_term() == ((0, 1), 1)


def test_degree():
    assert ZERO.degree() == -1
    assert ONE.degree() == 0
    assert (variable(1) * variable(2) + variable(3)).degree() == 2


def test_str_format():
    f = monomial((2, 1)) + monomial((1, 0, 1))
    assert str(f) == "x1^2*x2 + x1*x3"
    assert str(variable(2)) == "x2"
    assert str(monomial((1,), -2) + monomial((0, 1))) == "-2*x1 + x2"
    assert str(monomial((0, 0), 7)) == "7"


def test_parse_roundtrip():
    rng = random.Random(99)
    for _ in range(25):
        f = rand_poly(rng)
        assert parse_polynomial(str(f)) == f
    assert parse_polynomial("0") == ZERO
    assert parse_polynomial("1") == ONE
    assert parse_polynomial("x1^2*x2 + x1*x3") == monomial((2, 1)) + monomial((1, 0, 1))
    assert parse_polynomial("2*x1 - x2") == monomial((1,), 2) + monomial((0, 1), -1)
    with pytest.raises(ValueError):
        parse_polynomial("x0")
    with pytest.raises(ValueError):
        parse_polynomial("x1 +* x2")


def test_swap_variables():
    f = monomial((2, 1)) + monomial((0, 0, 3))
    assert swap_variables(f, 1) == monomial((1, 2)) + monomial((0, 0, 3))
    rng = random.Random(5)
    for _ in range(10):
        g = rand_poly(rng)
        for i in (1, 2, 3):
            assert swap_variables(swap_variables(g, i), i) == g


def test_divided_difference_basics():
    x1, x2 = variable(1), variable(2)
    assert divided_difference(x1, 1) == ONE
    assert divided_difference(x2, 1) == constant(-1)
    assert divided_difference(x1 * x2, 1) == ZERO
    assert divided_difference(ONE, 1) == ZERO
    # d_1 of x1^2 is x1 + x2.
    assert divided_difference(x1 * x1, 1) == x1 + x2


def test_divided_difference_degree_drop():
    # Degree drops by at least one (exactly one on homogeneous input whose
    # top part is not s_i-symmetric; more is possible otherwise).
    rng = random.Random(11)
    for _ in range(20):
        f = rand_poly(rng)
        g = divided_difference(f, 2)
        if not g.is_zero():
            assert g.degree() <= f.degree() - 1


def test_divided_difference_nilpotent():
    rng = random.Random(123)
    for _ in range(20):
        f = rand_poly(rng, nvars=5)
        for i in (1, 2, 3, 4):
            assert divided_difference(divided_difference(f, i), i).is_zero()


def test_divided_difference_commutation_and_braid():
    rng = random.Random(321)
    for _ in range(15):
        f = rand_poly(rng, nvars=5)
        # |i - j| >= 2: the operators commute.
        assert divided_difference(divided_difference(f, 1), 3) == divided_difference(
            divided_difference(f, 3), 1
        )
        assert divided_difference(divided_difference(f, 2), 4) == divided_difference(
            divided_difference(f, 4), 2
        )
        # Adjacent: d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1}.
        for i in (1, 2, 3):
            a = divided_difference(
                divided_difference(divided_difference(f, i), i + 1), i
            )
            b = divided_difference(
                divided_difference(divided_difference(f, i + 1), i), i + 1
            )
            assert a == b


def test_divided_difference_kills_symmetric_multiples():
    # d_i(f g) = d_i(f) g whenever g is s_i-symmetric.
    x1, x2, x3 = variable(1), variable(2), variable(3)
    sym = x1 * x2 + x3 * x3  # symmetric in x1, x2
    rng = random.Random(8)
    for _ in range(10):
        f = rand_poly(rng, nvars=3)
        assert divided_difference(f * sym, 1) == divided_difference(f, 1) * sym
