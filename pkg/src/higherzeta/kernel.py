"""Scalar special-function kernel.

Everything else in the package is built on the routines here:

* complex_power(b, e)   -- principal-branch b**e, restricted to Re(b) > 0
* hurwitz_zeta(s, a)    -- Euler-Maclaurin continuation of sum (a+n)^-s
* riemann_zeta(s)       -- hurwitz_zeta(s, 1)
* log_gamma(s)          -- Stirling series with argument promotion
* primes_up_to(n)       -- sieve of Eratosthenes

All arithmetic is IEEE binary64; arbitrary precision is out of scope.  The
default accuracy target is PrecisionPolicy.eps_abs = 1e-10 and the routines
are normally good to 1e-12 or better in their contract regions.

Euler-Maclaurin for the Hurwitz zeta: the summation start is shifted by an
integer m so that |a + m| is large compared with |s|, then

    zeta(s, a) = sum_{n<m} (a+n)^-s + q^{1-s}/(s-1) + q^-s/2
                 + sum_k B_{2k}/(2k)! * (s)_{2k-1} * q^{-s-2k+1},   q = a+m,

with the Bernoulli corrections added while they keep shrinking (cap k = 30).
If the smallest correction is still above target, the shift m is enlarged and
the evaluation is repeated.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, PoleError

# Euler-Mascheroni constant, 30 significant digits.
EULER_GAMMA = 0.577215664901532860606512090082

TWO_PI = 2.0 * math.pi
LOG_2PI = math.log(TWO_PI)


@dataclass(frozen=True)
class PrecisionPolicy:
    """Accuracy targets and truncation caps used across the package.

    eps_abs / eps_rel are the absolute and relative targets every series,
    product and quadrature cutoff aims at.  max_terms caps series truncation
    orders, quad_points sets the Gauss-Legendre order per panel.
    """

    eps_abs: float = 1e-10
    eps_rel: float = 1e-10
    max_terms: int = 32
    quad_points: int = 32

    def __post_init__(self):
        if not (self.eps_abs >= 2.0 ** -48):
            raise DomainError("eps_abs below binary64 realism (minimum 2^-48)")
        if not (self.eps_rel > 0.0):
            raise DomainError("eps_rel must be positive")
        if self.max_terms < 8:
            raise DomainError("max_terms must be at least 8")
        if self.quad_points < 4:
            raise DomainError("quad_points must be at least 4")


DEFAULT_POLICY = PrecisionPolicy()


@dataclass(frozen=True)
class PrimeList:
    """All primes up to `bound`, strictly ascending."""

    bound: int
    primes: tuple[int, ...]


def complex_power(base, expo):
    """Principal-branch power exp(expo * Log base) for Re(base) > 0."""
    base = complex(base)
    expo = complex(expo)
    if base.real <= 0.0:
        raise DomainError(f"complex_power requires Re(base) > 0, got {base}")
    return cmath.exp(expo * cmath.log(base))


def _bernoulli_numbers(n_max):
    """Exact Bernoulli numbers B_0..B_n (B_1 = -1/2 convention) as Fractions."""
    b = [Fraction(0)] * (n_max + 1)
    b[0] = Fraction(1)
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        binom = 1  # C(m+1, j), starting at j = 0
        for j in range(m):
            acc += binom * b[j]
            binom = binom * (m + 1 - j) // (j + 1)
        b[m] = -acc / (m + 1)
    return b

_B_EXACT = _bernoulli_numbers(62)
# B_{2k}/(2k)! for the Euler-Maclaurin corrections, k = 1..30.
_B2K_OVER_FACT = tuple(
    float(_B_EXACT[2 * k] / math.factorial(2 * k)) for k in range(1, 31)
)
# B_{2k}/(2k(2k-1)) for the Stirling series, k = 1..15.
_STIRLING = tuple(
    float(_B_EXACT[2 * k] / (2 * k * (2 * k - 1))) for k in range(1, 16)
)


def _is_nonpositive_integer(s, tol=1e-12):
    if abs(s.imag) > tol:
        return False
    r = round(s.real)
    return r <= 0 and abs(s.real - r) <= tol


def log_gamma(s):
    """Log of the gamma function, Stirling series after promoting Re(s) >= 12.

    Principal branch (real on the positive real axis, continuous off the
    negative real axis) for Re(s) > 0; for Re(s) <= 0 the result is a valid
    logarithm of Gamma(s) but may differ from the principal branch by a
    multiple of 2*pi*i.  Poles at the non-positive integers.
    """
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"log_gamma pole at s = {s}")
    shift = 0j
    w = s
    while w.real < 12.0:
        shift += cmath.log(w)
        w += 1.0
    v = (w - 0.5) * cmath.log(w) - w + 0.5 * LOG_2PI
    w2 = w * w
    wp = w
    for c in _STIRLING:
        v += c / wp
        wp *= w2
    return v - shift


def reciprocal_gamma(s):
    """1/Gamma(s); entire, exact zeros at the non-positive integers."""
    s = complex(s)
    if s.real > 0.5:
        return cmath.exp(-log_gamma(s))
    m = int(math.ceil(0.5 - s.real)) + 1
    v = cmath.exp(-log_gamma(s + m))
    for k in range(m):
        v *= s + k
    return v


def hurwitz_zeta(s, a, pol: PrecisionPolicy = DEFAULT_POLICY):
    """Analytic continuation of sum_{n>=0} (a+n)^-s for Re(a) > 0, s != 1."""
    s = complex(s)
    a = complex(a)
    if a.real <= 0.0:
        raise DomainError(f"hurwitz_zeta requires Re(a) > 0, got a = {a}")
    if abs(s - 1.0) < 1e-12:
        raise PoleError("hurwitz_zeta pole at s = 1")
    return _hurwitz_em(s, a, pol.eps_abs)


@lru_cache(maxsize=200_000)
def _hurwitz_em(s, a, eps_abs):
    target = max(eps_abs * 1e-2, 1e-16)
    reach = max(15.0, 1.25 * abs(s))
    for _ in range(3):
        val, floor = _hurwitz_em_once(s, a, reach, target)
        if floor <= eps_abs:
            return val
        reach *= 1.8
    return val


def _hurwitz_em_once(s, a, reach, target):
    m = max(0, int(math.ceil(reach - a.real)))
    if m > 0:
        n = np.arange(m)
        head = complex(np.exp(-s * np.log(a + n)).sum())
    else:
        head = 0.0j
    q = a + m
    logq = cmath.log(q)
    qs = cmath.exp(-s * logq)        # q^-s
    val = head + qs * q / (s - 1.0) + 0.5 * qs
    qpow = qs / q                    # q^{-s-2k+1} for k = 1
    poch = s                         # (s)_{2k-1} rising factorial
    floor = math.inf
    prev = math.inf
    for k, c in enumerate(_B2K_OVER_FACT, start=1):
        if k > 1:
            poch *= (s + (2 * k - 3)) * (s + (2 * k - 2))
            qpow /= q * q
        term = c * poch * qpow
        size = abs(term)
        if size > prev:
            # asymptotic series started diverging; prev is the error floor
            floor = prev
            break
        val += term
        prev = size
        if size < target:
            floor = size
            break
    return val, floor


def riemann_zeta(s, pol: PrecisionPolicy = DEFAULT_POLICY):
    """Riemann zeta via the Hurwitz kernel at a = 1.

    For Re(s) < -1/2 the summation-shift cancellation in Euler-Maclaurin
    grows like q^{|s|+1} ulp, so the reflection
    zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s) is used there;
    it also lands the trivial zeros at float-level exactness.
    """
    s = complex(s)
    if abs(s - 1.0) < 1e-12:
        raise PoleError("riemann_zeta pole at s = 1")
    if s.real < -0.5:
        return (cmath.exp(s * math.log(2.0) + (s - 1.0) * math.log(math.pi))
                * cmath.sin(0.5 * math.pi * s)
                * cmath.exp(log_gamma(1.0 - s))
                * _hurwitz_em(1.0 - s, 1.0 + 0.0j, pol.eps_abs))
    return _hurwitz_em(s, 1.0 + 0.0j, pol.eps_abs)


def sieve_bool(n):
    """Boolean primality table for 0..n (numpy)."""
    if n < 2:
        raise DomainError("sieve bound must be at least 2")
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if is_p[p]:
            is_p[p * p:: p] = False
    return is_p


def primes_up_to(n: int) -> PrimeList:
    """All primes <= n, ascending."""
    if n < 2:
        raise DomainError(f"primes_up_to requires n >= 2, got {n}")
    is_p = sieve_bool(n)
    return PrimeList(bound=n, primes=tuple(int(p) for p in np.nonzero(is_p)[0]))
