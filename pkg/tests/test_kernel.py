import cmath
import math

import numpy as np
import pytest
import scipy.special as sps

from higherzeta.errors import DomainError, PoleError
from higherzeta.kernel import (DEFAULT_POLICY, PrecisionPolicy, complex_power,
                               hurwitz_zeta, log_gamma, primes_up_to,
                               riemann_zeta)

from conftest import cclose, crel


def hurwitz_direct(s, a, n_terms=200_000):
    """Independent oracle: partial sum plus an integral-bracketed tail.

    sum_{n>N} (a+n)^-s lies between the integrals from N and N+1; taking
    the midpoint of the bracket leaves an error below the bracket width.
    """
    s = complex(s)
    a = complex(a)
    n = np.arange(n_terms)
    partial = complex(np.exp(-s * np.log(a + n)).sum())
    upper = (a + n_terms - 1) ** (1 - s) / (s - 1)
    lower = (a + n_terms) ** (1 - s) / (s - 1)
    return partial + 0.5 * (upper + lower)


class TestComplexPower:
    def test_one_to_anything(self):
        assert cclose(complex_power(1.0, 5.0), 1.0, 1e-15)

    def test_principal_square_root(self):
        assert cclose(complex_power(4.0, 0.5), 2.0, 1e-15)

    def test_imaginary_exponent(self):
        # oracle: plain exp/log evaluation
        want = cmath.exp(1j * math.log(2.0))
        got = complex_power(2.0, 1j)
        assert cclose(got, want, 1e-15)
        assert cclose(got, complex(0.76924, 0.63896), 1e-5)

    def test_left_half_plane_rejected(self):
        with pytest.raises(DomainError):
            complex_power(-1.0, 0.5)
        with pytest.raises(DomainError):
            complex_power(0.0, 2.0)


class TestHurwitzZeta:
    def test_basel_value(self):
        assert cclose(hurwitz_zeta(2.0, 1.0), math.pi ** 2 / 6.0, 1e-12)

    @pytest.mark.parametrize("s,a", [
        (1.5, 0.3), (2.5, 1.0), (1.5 + 2.0j, 4.7), (3.0 - 1.0j, 0.05),
        (2.0, 2.5 + 1.0j),
    ])
    def test_matches_direct_sum(self, s, a):
        assert cclose(hurwitz_zeta(s, a), hurwitz_direct(s, a),
                      DEFAULT_POLICY.eps_abs)

    @pytest.mark.parametrize("z", [0.1, 0.5, 1.0, 2.0, 0.3 + 0.7j])
    def test_value_at_zero(self, z):
        # continuation value at s = 0 is 1/2 - z
        assert cclose(hurwitz_zeta(0.0, z), 0.5 - complex(z), 1e-12)

    def test_minus_one_is_minus_twelfth(self):
        assert cclose(hurwitz_zeta(-1.0, 1.0), -1.0 / 12.0, 1e-12)

    @pytest.mark.parametrize("s", [-3.5, -0.5, 0.5, 2.0, -2.0 + 1.0j])
    @pytest.mark.parametrize("a", [0.35, 1.0, 2.6])
    def test_shift_identity(self, s, a):
        lhs = hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1.0)
        assert cclose(lhs, complex_power(a, -s), 1e-10)

    def test_pole_and_domain_errors(self):
        with pytest.raises(PoleError):
            hurwitz_zeta(1.0, 2.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, -1.0)


class TestRiemannZeta:
    def test_classical_values(self):
        assert cclose(riemann_zeta(2.0), math.pi ** 2 / 6.0, 1e-12)
        assert cclose(riemann_zeta(4.0), math.pi ** 4 / 90.0, 1e-12)
        assert cclose(riemann_zeta(0.0), -0.5, 1e-12)

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_trivial_zeros(self, k):
        assert abs(riemann_zeta(-2.0 * k)) <= 1e-10

    def test_pole(self):
        with pytest.raises(PoleError):
            riemann_zeta(1.0)


class TestLogGamma:
    def test_known_points(self):
        assert cclose(log_gamma(1.0), 0.0, 1e-13)
        assert cclose(log_gamma(0.5), 0.5 * math.log(math.pi), 1e-13)
        assert cclose(log_gamma(5.0), math.log(24.0), 1e-13)

    @pytest.mark.parametrize("s", [
        0.5, 1.7, 10.0, 100.0, 0.5 + 100.0j, 3.0 - 40.0j, 25.0 + 7.0j,
    ])
    def test_against_scipy(self, s):
        assert crel(log_gamma(s), complex(sps.loggamma(s)), 1e-12)

    @pytest.mark.parametrize("s", [0.3, 1.1, 4.5, 0.5 + 3.0j, 2.0 - 7.0j])
    def test_recurrence(self, s):
        lhs = cmath.exp(log_gamma(complex(s) + 1.0))
        rhs = complex(s) * cmath.exp(log_gamma(s))
        assert crel(lhs, rhs, 1e-10)

    @pytest.mark.parametrize("s", [0.0, -1.0, -2.0, -7.0])
    def test_poles(self, s):
        with pytest.raises(PoleError):
            log_gamma(s)


class TestPrimes:
    def test_small_tables(self):
        assert primes_up_to(10).primes == (2, 3, 5, 7)
        assert primes_up_to(2).primes == (2,)

    def test_against_trial_division(self):
        def is_prime(n):
            return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))

        got = primes_up_to(100).primes
        want = tuple(n for n in range(2, 101) if is_prime(n))
        assert got == want
        assert len(got) == 25

    def test_sorted_strictly(self):
        ps = primes_up_to(1000).primes
        assert all(a < b for a, b in zip(ps, ps[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            primes_up_to(1)


class TestPrecisionPolicy:
    def test_defaults_valid(self):
        pol = PrecisionPolicy()
        assert pol.eps_abs == 1e-10 and pol.max_terms == 32

    def test_rejects_unrealistic_eps(self):
        with pytest.raises(DomainError):
            PrecisionPolicy(eps_abs=1e-20)

    def test_rejects_tiny_caps(self):
        with pytest.raises(DomainError):
            PrecisionPolicy(max_terms=4)
