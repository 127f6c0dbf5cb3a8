"""Rational/polynomial arithmetic and simplex integration.

The integration oracle here is an independent path: iterated univariate
antiderivatives with the upper bound t_k = 1 - t_1 - ... - t_{k-1}
substituted as a polynomial, never the closed-form factorial formula.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liechar import (MultiPoly, integrate_monomial_simplex,
                     integrate_poly_simplex, poly_from_json, poly_to_json,
                     rational_from_str, rational_to_str)

from helpers import rand_fraction


def _antiderivative(p: MultiPoly, var: int) -> MultiPoly:
    terms = {}
    for e, c in p.terms.items():
        key = e[:var] + (e[var] + 1,) + e[var + 1:]
        terms[key] = c / (e[var] + 1)
    return MultiPoly(p.nvars, terms)


def _substitute(p: MultiPoly, var: int, replacement: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero(p.nvars)
    powers = {0: MultiPoly.constant(p.nvars, 1)}

    def power(k):
        if k not in powers:
            powers[k] = power(k - 1) * replacement
        return powers[k]

    for e, c in p.terms.items():
        rest = MultiPoly(p.nvars, {e[:var] + (0,) + e[var + 1:]: c})
        out = out + rest * power(e[var])
    return out


def fubini_integral(p: MultiPoly) -> Fraction:
    """Integrate over D_n by one variable at a time, innermost last."""
    n = p.nvars
    current = p
    for var in reversed(range(n)):
        upper = MultiPoly.constant(n, 1)
        for i in range(var):
            upper = upper - MultiPoly.variable(n, i)
        anti = _antiderivative(current, var)
        # lower bound 0 contributes nothing: every antiderivative term
        # carries a positive power of the integrated variable
        current = _substitute(anti, var, upper)
    return current.constant_value()


class TestRationalStrings:
    def test_round_trip_is_identity(self):
        rng = random.Random(11)
        for _ in range(200):
            x = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
            assert rational_from_str(rational_to_str(x)) == x

    def test_formats(self):
        assert rational_to_str(Fraction(3)) == "3"
        assert rational_to_str(Fraction(-6, 4)) == "-3/2"
        assert rational_from_str("-3/2") == Fraction(-3, 2)
        with pytest.raises(ValueError):
            rational_from_str("1/0")
        with pytest.raises(ValueError):
            rational_from_str("x")


class TestMultiPoly:
    def test_zero_coefficients_never_stored(self):
        p = MultiPoly(2, {(1, 0): 1, (0, 1): 0})
        assert (0, 1) not in p.terms
        assert (p - p).terms == {}

    def test_mixed_arithmetic_with_fractions(self):
        t1 = MultiPoly.variable(2, 0)
        p = Fraction(1, 2) + t1 * 3 - 1
        assert p.coefficient((0, 0)) == Fraction(-1, 2)
        assert p.coefficient((1, 0)) == 3
        assert sum([t1, t1]) == t1 * 2
        assert (t1 - t1) == 0
        assert MultiPoly.constant(2, Fraction(5, 7)) == Fraction(5, 7)

    def test_graded_lex_term_order(self):
        p = MultiPoly(2, {(0, 2): 1, (1, 0): 2, (2, 0): 3, (0, 1): 4})
        order = [e for e, _ in p.sorted_terms()]
        assert order == [(0, 1), (1, 0), (0, 2), (2, 0)]

    def test_degree_zero_round_trips_to_rational(self):
        p = MultiPoly.constant(3, Fraction(-7, 3))
        assert p.is_constant()
        assert p.constant_value() == Fraction(-7, 3)

    def test_json_round_trip(self):
        p = MultiPoly(2, {(1, 1): Fraction(1, 2), (0, 0): -2, (3, 0): 5})
        assert poly_from_json(poly_to_json(p), 2) == p

    def test_diff_and_eval(self):
        t1, t2 = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
        p = t1 * t1 * t2 + t2 * 3
        assert p.diff(0) == t1 * t2 * 2
        assert p.eval_at([Fraction(1, 2), Fraction(2)]) == Fraction(13, 2)

    def test_variable_count_mismatch_raises(self):
        with pytest.raises(ValueError):
            MultiPoly.variable(2, 0) + MultiPoly.variable(3, 0)


class TestSimplexIntegration:
    def test_unit_interval_length(self):
        assert integrate_monomial_simplex(1, (0,)) == 1

    def test_triangle_area(self):
        assert integrate_monomial_simplex(2, (0, 0)) == Fraction(1, 2)

    def test_t1_t2_over_triangle(self):
        # oracle value: fubini gives 1/24
        assert fubini_integral(MultiPoly(2, {(1, 1): 1})) == Fraction(1, 24)
        assert integrate_monomial_simplex(2, (1, 1)) == Fraction(1, 24)

    def test_linear_poly_example(self):
        p = MultiPoly(2, {(2, 0): 3, (0, 1): -1})
        assert fubini_integral(p) == Fraction(1, 12)
        assert integrate_poly_simplex(p) == Fraction(1, 12)

    def test_half_from_t_on_interval(self):
        assert integrate_poly_simplex(MultiPoly(1, {(1,): 1})) == Fraction(1, 2)

    def test_dimension_zero_rejected(self):
        with pytest.raises(ValueError):
            integrate_monomial_simplex(0, ())
        with pytest.raises(ValueError):
            integrate_poly_simplex(MultiPoly.constant(0, 1))

    def test_matches_fubini_oracle_on_random_polynomials(self):
        rng = random.Random(2024)
        for _ in range(60):
            n = rng.randint(1, 3)
            terms = {}
            for _ in range(rng.randint(1, 6)):
                e = tuple(rng.randint(0, 3) for _ in range(n))
                terms[e] = terms.get(e, Fraction(0)) + rand_fraction(rng)
            p = MultiPoly(n, terms)
            assert integrate_poly_simplex(p) == fubini_integral(p)

    @settings(max_examples=60, deadline=None)
    @given(
        data=st.lists(
            st.tuples(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                      st.fractions(max_denominator=6)),
            min_size=0, max_size=5),
        extra=st.lists(
            st.tuples(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                      st.fractions(max_denominator=6)),
            min_size=0, max_size=5),
        c=st.fractions(max_denominator=6),
    )
    def test_integration_is_linear(self, data, extra, c):
        def build(items):
            terms = {}
            for e, v in items:
                terms[e] = terms.get(e, Fraction(0)) + v
            return MultiPoly(2, terms)

        p, q = build(data), build(extra)
        lhs = integrate_poly_simplex(p * c + q)
        rhs = c * integrate_poly_simplex(p) + integrate_poly_simplex(q)
        assert lhs == rhs
