import cmath
import json

import pytest
from hypothesis import given, settings, strategies as st

from skeinkit.laurent import (
    GaussInt, I, LaurentPoly, ParseError, eval_complex, parse_poly, substitute, substitute_scaled,
)

VARS = ("a", "z", "A")

coeffs = st.builds(GaussInt, st.integers(-5, 5), st.integers(-5, 5))
monos = st.dictionaries(st.sampled_from(VARS), st.integers(-4, 4), max_size=3)
polys = st.lists(st.tuples(coeffs, monos), max_size=5).map(
    lambda ts: sum((LaurentPoly.monomial(c, m) for c, m in ts), LaurentPoly()))
units = st.sampled_from([GaussInt(1), GaussInt(-1), I, -I])

a = LaurentPoly.var("a")
z = LaurentPoly.var("z")


class TestGaussInt:
    def test_units(self):
        assert I * I == GaussInt(-1)
        assert I ** -1 == -I
        assert (-I).inverse() == I

    def test_non_unit_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            GaussInt(2).inverse()

    @given(coeffs, coeffs)
    def test_conjugate_multiplicative(self, x, y):
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()


class TestRing:
    @given(polys, polys, polys)
    def test_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)
        assert (p + q) + r == p + (q + r)

    @given(polys, polys, polys)
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(polys, polys)
    def test_commutative(self, p, q):
        assert p * q == q * p

    @given(polys)
    def test_identities(self, p):
        assert p + LaurentPoly() == p
        assert p * 1 == p
        assert (p - p).is_zero()

    def test_zero_coefficients_dropped(self):
        p = a + z - a
        assert p == z
        assert p.terms == z.terms

    def test_inverse_of_monomial(self):
        m = LaurentPoly.monomial(I, {"a": 2, "z": -1})
        assert m * m.inverse() == 1
        assert m ** -2 * m ** 2 == 1

    def test_non_monomial_not_invertible(self):
        with pytest.raises(ZeroDivisionError):
            (a + 1).inverse()


class TestText:
    @pytest.mark.parametrize("text", [
        "0", "1", "-1", "i", "-i", "2*i", "-A^2 - A^-2", "a^2*z^-1 + a - z^-1",
        "(1+2*i)*a", "4 + (3-i)*a^-3*z^2",
    ])
    def test_canonical_fixed_points(self, text):
        assert parse_poly(text).to_text() == text

    def test_canonical_order(self):
        # union of variables sorted by name, exponent vectors descending
        p = -z ** -1 + a + a ** 2 * z ** -1
        assert p.to_text() == "a^2*z^-1 + a - z^-1"

    def test_parser_accepts_loose_forms(self):
        assert parse_poly("a*(a - a^-1)*z^-1 + a") == a * ((a - a ** -1) * z ** -1 + 1)
        assert parse_poly(" (a+z)^2 ") == a * a + 2 * a * z + z * z
        assert parse_poly("-(i)^3") == I

    @pytest.mark.parametrize("bad", ["", "a +", "a^", "2**a", "(a", "a b", "i^x", "3.5"])
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            parse_poly(bad)

    @given(polys)
    def test_text_round_trip(self, p):
        assert parse_poly(p.to_text()) == p

    @given(polys)
    def test_json_round_trip(self, p):
        s = p.to_json()
        q = LaurentPoly.from_json(s)
        assert q == p
        assert q.to_json() == s
        json.loads(s)

    def test_bad_json(self):
        with pytest.raises(ParseError):
            LaurentPoly.from_json("[1, 2")


class TestSubstitution:
    @given(polys, polys, units, st.sampled_from([1, -1]))
    def test_scaled_substitution_is_a_ring_map(self, p, q, u, power):
        def f(x):
            return substitute_scaled(x, "a", u, "a", power)
        assert f(p * q) == f(p) * f(q)
        assert f(p + q) == f(p) + f(q)

    def test_scaled_substitution(self):
        assert substitute_scaled(a ** 3 + z, "a", I, "a") == -I * a ** 3 + z
        assert substitute_scaled(a ** 2, "a", -1, "b", -1) == LaurentPoly.var("b") ** -2

    def test_substitute_polynomial(self):
        A = LaurentPoly.var("A")
        assert substitute(a ** -1 * z, "a", -(A ** 3)) == -(A ** -3) * z

    @given(polys, polys)
    @settings(max_examples=50)
    def test_eval_is_multiplicative(self, p, q):
        point = {"a": cmath.exp(0.7j) * 1.3, "z": 0.4 - 1.1j, "A": cmath.exp(2.1j)}
        lhs = eval_complex(p * q, point)
        rhs = eval_complex(p, point) * eval_complex(q, point)
        assert abs(lhs - rhs) <= 1e-9 * max(1, abs(rhs))

    def test_eval_errors(self):
        with pytest.raises(KeyError):
            eval_complex(a * z, {"a": 1})
        with pytest.raises(ZeroDivisionError):
            eval_complex(a ** -1, {"a": 0})

    def test_golden_loop(self):
        # -2 cos(2 pi / 5) = 1 - golden ratio
        A = LaurentPoly.var("A")
        val = eval_complex(-(A ** 2 + A ** -2), {"A": cmath.exp(1j * cmath.pi / 5)})
        assert abs(val - (1 - 5 ** 0.5) / 2) < 1e-12
