import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higherzeta.errors import DomainError, ShapeError
from higherzeta.series import (PowerSeries, bernoulli_gf_coeffs,
                               multiple_bernoulli, series_from, series_inv,
                               series_mul, series_one)

from conftest import cclose

# classical Bernoulli numbers (x/(e^x - 1) convention), exact
CLASSICAL_BERNOULLI = {
    0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6),
    4: Fraction(-1, 30), 6: Fraction(1, 42), 8: Fraction(-1, 30),
    10: Fraction(5, 66), 12: Fraction(-691, 2730),
    3: Fraction(0), 5: Fraction(0), 7: Fraction(0), 9: Fraction(0),
    11: Fraction(0),
}


class TestArithmetic:
    def test_product_of_conjugate_binomials(self):
        a = series_from([1, 1], order=3)
        b = series_from([1, -1], order=3)
        assert series_mul(a, b).coeffs == (1 + 0j, 0j, -1 + 0j)

    def test_one_is_identity(self):
        a = series_from([2.0, -1.5, 0.25j], order=3)
        assert series_mul(a, series_one(3)).coeffs == a.coeffs

    def test_exponential_square(self):
        e = series_from([1 / math.factorial(n) for n in range(6)])
        sq = series_mul(e, e)
        # coefficient of x^2 in e^{2x} is 2
        assert cclose(sq.coeffs[2], 2.0, 1e-14)

    def test_order_mismatch(self):
        with pytest.raises(ShapeError):
            series_mul(series_one(3), series_one(4))

    def test_geometric_inverse(self):
        inv = series_inv(series_from([1, -1], order=8))
        assert all(cclose(c, 1.0, 1e-14) for c in inv.coeffs)

    def test_inverse_of_one(self):
        assert series_inv(series_one(5)).coeffs == (1 + 0j, 0j, 0j, 0j, 0j)

    def test_inverse_of_exp_negates_argument(self):
        en = series_from([(-1) ** n / math.factorial(n) for n in range(10)])
        ep = series_inv(en)
        for n, c in enumerate(ep.coeffs):
            assert cclose(c, 1.0 / math.factorial(n), 1e-12)

    def test_zero_constant_term_rejected(self):
        with pytest.raises(DomainError):
            series_inv(series_from([0, 1], order=4))

    @given(st.lists(st.tuples(
        st.floats(-2, 2, allow_nan=False), st.floats(-2, 2, allow_nan=False)),
        min_size=2, max_size=10))
    @settings(max_examples=60, deadline=None)
    def test_mul_inv_roundtrip(self, pairs):
        coeffs = [complex(re, im) for re, im in pairs]
        if abs(coeffs[0]) < 1e-3:
            coeffs[0] = 1.0 + 0j
        a = PowerSeries(tuple(coeffs))
        prod = series_mul(a, series_inv(a))
        scale = max(abs(c) for c in coeffs) / abs(coeffs[0])
        assert cclose(prod.coeffs[0], 1.0, 1e-9 * max(1.0, scale ** 10))
        for c in prod.coeffs[1:]:
            assert abs(c) <= 1e-9 * max(1.0, scale ** 10)


class TestMultipleBernoulli:
    @pytest.mark.parametrize("omega", [(1.0,), (2.0,), (1.0, 2.0),
                                       (1.0, 1.0 + 0.3j, 2.0)])
    def test_leading_value(self, omega):
        table = multiple_bernoulli(0.7 + 0.2j, omega, 0)
        prod = 1.0 + 0j
        for w in omega:
            prod *= w
        assert cclose(table.values[0], 1.0 / prod, 1e-13)

    def test_classical_b1(self):
        assert cclose(multiple_bernoulli(1.0, (1.0,), 1).values[1], -0.5, 1e-14)

    def test_linear_polynomial(self):
        # B_1(z, (1)) = 1/2 - z
        assert cclose(multiple_bernoulli(3.0, (1.0,), 1).values[1], -2.5, 1e-13)
        assert cclose(multiple_bernoulli(0.25, (1.0,), 1).values[1], 0.25, 1e-13)

    def test_matches_classical_table(self):
        values = multiple_bernoulli(1.0, (1.0,), 12).values
        for n, want in CLASSICAL_BERNOULLI.items():
            assert cclose(values[n], float(want), 1e-12), n

    @pytest.mark.parametrize("z,omega", [
        (0.5, (1.0,)), (1.3, (1.0, 2.0)), (0.2 + 0.4j, (2.0, 1.0 + 0.3j)),
    ])
    def test_generating_function_consistency(self, z, omega):
        # evaluate the closed form at x = 0.1 against the truncated series
        x = 0.1
        r = len(omega)
        closed = x ** r * cmath.exp(-complex(z) * x)
        for w in omega:
            closed /= 1.0 - cmath.exp(-complex(w) * x)
        b = bernoulli_gf_coeffs(z, omega, 26)
        series = sum(c * x ** n for n, c in enumerate(b))
        assert cclose(series, closed, 1e-10)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_degree_in_z(self, n):
        # an (n+1)-th forward difference of a degree-n polynomial vanishes
        omega = (1.0, 2.0)
        h = 0.5
        vals = [multiple_bernoulli(1.0 + k * h, omega, n).values[n]
                for k in range(n + 2)]
        diff = sum((-1) ** k * math.comb(n + 1, k) * vals[n + 1 - k]
                   for k in range(n + 2))
        assert abs(diff) <= 1e-8

    def test_invalid_weights(self):
        with pytest.raises(DomainError):
            multiple_bernoulli(1.0, (-1.0,), 3)
