"""Truncated formal power series and multiple Bernoulli polynomials.

A PowerSeries holds the first `order` coefficients of a formal series in x;
arithmetic never looks beyond the truncation.  The one consumer that matters
is the generating function

    x^r e^{-z x} / prod_j (1 - e^{-w_j x}) = sum_n B_n(z, w) x^n / n!

whose Taylor coefficients are the multiple Bernoulli polynomials B_n(z, w).
Each factor is normalized to unit constant term before inversion: with
E(y) = (1 - e^{-y})/y the generating function equals

    (1 / prod_j w_j) * e^{-z x} * prod_j E(w_j x)^{-1},

so no explicit division by x^r is ever needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, ShapeError


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0..c_{order-1} of a truncated series sum c_n x^n."""

    coeffs: tuple[complex, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __call__(self, x):
        """Horner evaluation of the truncated polynomial."""
        acc = 0.0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def series_from(coeffs, order=None) -> PowerSeries:
    cs = [complex(c) for c in coeffs]
    if order is not None:
        cs = (cs + [0.0j] * order)[:order]
    return PowerSeries(tuple(cs))


def series_one(order: int) -> PowerSeries:
    return series_from([1.0], order)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the common order."""
    if a.order != b.order:
        raise ShapeError(f"order mismatch: {a.order} != {b.order}")
    n = a.order
    full = np.convolve(np.asarray(a.coeffs), np.asarray(b.coeffs))
    return PowerSeries(tuple(complex(c) for c in full[:n]))


def series_inv(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse to truncation; needs a nonzero constant term."""
    if a.coeffs[0] == 0:
        raise DomainError("series_inv requires a nonzero constant term")
    n = a.order
    c = np.asarray(a.coeffs)
    out = np.zeros(n, dtype=complex)
    out[0] = 1.0 / c[0]
    for k in range(1, n):
        out[k] = -np.dot(c[1 : k + 1], out[k - 1 :: -1][: k]) / c[0]
    return PowerSeries(tuple(complex(v) for v in out))


@dataclass(frozen=True)
class BernoulliTable:
    """B_0(z, w)..B_N(z, w) for one (z, weight vector) pair."""

    z: complex
    omega: tuple[complex, ...]
    values: tuple[complex, ...]


def _weights(omega) -> tuple[complex, ...]:
    # Accepts a WeightVector or any sequence of complex weights.
    ws = tuple(complex(w) for w in getattr(omega, "omegas", omega))
    if any(w.real <= 0.0 for w in ws):
        raise DomainError("weights must satisfy Re(w_j) > 0")
    return ws


@lru_cache(maxsize=4096)
def _gf_coeffs(z: complex, omega: tuple[complex, ...], nterms: int):
    """b_n = B_n(z, omega)/n!, the raw Taylor coefficients, n < nterms."""
    prod = series_one(nterms)
    for w in omega:
        # E(w x) = (1 - e^{-wx})/(wx) = sum (-1)^n (w x)^n / (n+1)!
        cs = []
        p = 1.0 + 0.0j
        for n in range(nterms):
            cs.append(p / math.factorial(n + 1))
            p *= -w
        prod = series_mul(prod, PowerSeries(tuple(cs)))
    inv = series_inv(prod)
    cs = []
    p = 1.0 + 0.0j
    for n in range(nterms):
        cs.append(p / math.factorial(n))
        p *= -z
    g = series_mul(PowerSeries(tuple(cs)), inv)
    wprod = 1.0 + 0.0j
    for w in omega:
        wprod *= w
    return tuple(c / wprod for c in g.coeffs)


def bernoulli_gf_coeffs(z, omega, nterms: int) -> tuple[complex, ...]:
    """Coefficients B_n(z, omega)/n! for n = 0..nterms-1."""
    if nterms < 1:
        raise DomainError("nterms must be positive")
    return _gf_coeffs(complex(z), _weights(omega), nterms)


def multiple_bernoulli(z, omega, N: int) -> BernoulliTable:
    """Multiple Bernoulli polynomials B_0(z, w)..B_N(z, w).

    For the empty weight vector the generating function degenerates to
    e^{-zx}, i.e. B_n(z, ()) = (-z)^n.
    """
    if N < 0:
        raise DomainError("N must be nonnegative")
    ws = _weights(omega)
    b = bernoulli_gf_coeffs(z, ws, N + 1)
    values = tuple(c * math.factorial(n) for n, c in enumerate(b))
    return BernoulliTable(z=complex(z), omega=ws, values=values)
