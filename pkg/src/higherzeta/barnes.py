"""Barnes multiple zeta, multiple gamma and multiple sine functions.

The multiple zeta of weight w = (w_1..w_r) is the lattice sum

    zeta(s, z, w) = sum_{n in Z_{>=0}^r} (z + n.w)^{-s},    Re(z) > 0,

absolutely convergent for Re(s) > r and continued elsewhere through the
Mellin split: with g(x) = e^{-zx} prod_j (1 - e^{-w_j x})^{-1},

    Gamma(s) zeta(s, z, w) = int_0^x0 x^{s-1} g(x) dx + int_{x0}^inf ...

On [0, x0] the integrand is replaced by the Bernoulli generating-function
series, integrated term by term:

    int_0^{x0} -> sum_n b_n x0^{s+n-r} / (s+n-r),  b_n = B_n(z, w)/n!,

a representation valid for every s away from the poles s = 1..r (the poles
at s = r - n for n >= r are cancelled by the zeros of 1/Gamma, and the
cancellation is carried out explicitly so the routine stays finite at the
non-positive integers).  The split point x0 = min(1, pi/max|w_j|) keeps the
coefficient tail geometric with ratio <= 1/2; the upper integral is done by
Gauss-Legendre on log-spaced panels out to a certified cutoff X_max.

The multiple gamma is Gamma(z, w) = exp(d/ds zeta(s, z, w)|_{s=0}) and the
multiple sine is S(z, w) = Gamma(z, w)^{-1} Gamma(|w| - z, w)^{(-1)^r}.

An empty weight vector is the base of the ladder recursions and uses the
degenerate forms zeta(s, z, ()) = z^{-s}, Gamma(z, ()) = 1/z, S(z, ()) = -1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ContinuationError, DomainError, NearPoleError, PoleError
from .kernel import (DEFAULT_POLICY, EULER_GAMMA, PrecisionPolicy, log_gamma,
                     reciprocal_gamma)
from .series import BernoulliTable, bernoulli_gf_coeffs, multiple_bernoulli

# Below this real part the quadrature path is not trusted and the gamma
# ladder recursion is used instead.
_Z_QUAD_MIN = 1e-3
# Extra generating-function terms folded in beyond PrecisionPolicy.max_terms.
_N_EXTRA = 48


@dataclass(frozen=True)
class WeightVector:
    """Lattice generators (w_1, .., w_r), all with positive real part.

    r = 0 (empty tuple) is accepted and denotes the ladder base, where the
    lattice degenerates to the single point 0.
    """

    omegas: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "omegas", tuple(complex(w) for w in self.omegas))
        if any(w.real <= 0.0 for w in self.omegas):
            raise DomainError("WeightVector requires Re(w_j) > 0 for every j")

    @property
    def r(self) -> int:
        return len(self.omegas)

    @property
    def total(self) -> complex:
        return sum(self.omegas, 0.0 + 0.0j)

    def prepend(self, w) -> "WeightVector":
        return WeightVector((complex(w),) + self.omegas)

    def prefix(self) -> "WeightVector":
        return WeightVector(self.omegas[:-1])


def as_weights(omega) -> WeightVector:
    if isinstance(omega, WeightVector):
        return omega
    return WeightVector(tuple(complex(w) for w in omega))


@dataclass(frozen=True)
class MellinSplit:
    """Prepared continuation data for one (s, z, w) evaluation."""

    bernoulli: BernoulliTable
    x0: float
    x_max: float
    n_terms: int
    nodes: np.ndarray
    weights: np.ndarray


@lru_cache(maxsize=16)
def _leggauss(n):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _split_x0(ws):
    maxw = max(abs(w) for w in ws)
    return min(1.0, math.pi / maxw)


def _find_xmax(res, z, ws, x0, eps):
    """Cutoff X with certified integral tail below eps."""
    rez = z.real
    sig = max(res - 1.0, 0.0)
    x = max(x0 + 1.0, 2.0 * (sig + 2.0) / rez)

    def envelope(t):
        v = math.exp((res - 1.0) * math.log(t) - rez * t)
        for w in ws:
            v /= 1.0 - math.exp(-w.real * t)
        return v

    for _ in range(400):
        if envelope(x) * (2.0 / rez) <= eps:
            return x
        x *= 1.25
    raise ContinuationError("could not certify the integral cutoff")


def _panels(s, z, x0, x_max, quad_points):
    """Log-spaced panels, shortened where x^{s-1} e^{-zx} oscillates."""
    gx, gw = _leggauss(quad_points)
    osc_s = abs(s.imag)
    osc_z = abs(z.imag)
    nodes = []
    weights = []
    a = x0
    while a < x_max:
        step = 0.75 * a
        if osc_s or osc_z:
            step = min(step, 2.5 / (osc_s / a + osc_z + 1e-300))
        b = min(a + max(step, 1e-3), x_max)
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        nodes.append(mid + half * gx)
        weights.append(half * gw)
        a = b
    return np.concatenate(nodes), np.concatenate(weights)


def prepare_split(s, z, omega, pol: PrecisionPolicy = DEFAULT_POLICY,
                  n_extra: int = _N_EXTRA) -> MellinSplit:
    s = complex(s)
    z = complex(z)
    ws = as_weights(omega).omegas
    x0 = _split_x0(ws)
    n_hi = min(pol.max_terms + n_extra, 158)
    table = multiple_bernoulli(z, ws, n_hi)
    x_max = _find_xmax(s.real, z, ws, x0, pol.eps_abs * 1e-2)
    nodes, weights = _panels(s, z, x0, x_max, pol.quad_points)
    return MellinSplit(bernoulli=table, x0=x0, x_max=x_max, n_terms=n_hi,
                       nodes=nodes, weights=weights)


def _lattice_sum_factor(x, z, ws):
    """g(x) = e^{-zx} prod (1 - e^{-w x})^{-1} on a numpy node array."""
    v = np.exp(-z * x)
    for w in ws:
        v = v / (1.0 - np.exp(-w * x))
    return v


def _tail_integral(s, z, ws, split: MellinSplit):
    x = split.nodes
    integrand = np.exp((s - 1.0) * np.log(x)) * _lattice_sum_factor(x, z, ws)
    return complex(np.dot(split.weights, integrand))


def _rgamma_over(s, m):
    """1/(Gamma(s) (s+m)) for integer m >= 0, stable near s = -m."""
    k_top = m + 2
    prod = 1.0 + 0.0j
    for k in range(k_top):
        if k != m:
            prod *= s + k
    return prod * cmath.exp(-log_gamma(s + k_top))


def _check_poles(s, r):
    for k in range(1, r + 1):
        d = abs(s - k)
        if d <= 1e-12:
            raise PoleError(f"multiple zeta pole at s = {k}")
        if d < 1e-8:
            raise NearPoleError(f"s within 1e-8 of the pole at {k}")


def barnes_zeta(s, z, omega, pol: PrecisionPolicy = DEFAULT_POLICY):
    """Multiple zeta zeta(s, z, w), continued to all s off the poles 1..r."""
    s = complex(s)
    z = complex(z)
    wv = as_weights(omega)
    if z.real <= 0.0:
        raise DomainError(f"barnes_zeta requires Re(z) > 0, got z = {z}")
    if wv.r == 0:
        return cmath.exp(-s * cmath.log(z))
    _check_poles(s, wv.r)
    return _barnes_zeta_cached(s, z, wv.omegas, pol)


@lru_cache(maxsize=65536)
def _barnes_zeta_cached(s, z, ws, pol):
    r = len(ws)
    split = prepare_split(s, z, ws, pol)
    b = np.asarray(bernoulli_gf_coeffs(z, ws, split.n_terms + 1))
    n = np.arange(split.n_terms + 1)
    d = s + n - r
    small = np.abs(d) < 1e-6
    singular = None
    if small.any():
        idx = int(np.nonzero(small)[0][0])
        if idx >= r:
            singular = idx
        # idx < r is a true pole; already rejected by _check_poles
    mask = ~small
    series_part = complex(np.sum(b[mask] * split.x0 ** d[mask] / d[mask]))
    tail = _tail_integral(s, z, ws, split)
    val = reciprocal_gamma(s) * (series_part + tail)
    if singular is not None:
        m = singular - r
        val += complex(b[singular]) * split.x0 ** (s + m) * _rgamma_over(s, m)
    return val


def barnes_zeta_special_value(m: int, z, omega):
    """zeta(-m, z, w) by the closed Bernoulli form, m a nonnegative integer."""
    if m < 0:
        raise DomainError("m must be a nonnegative integer")
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError("requires Re(z) > 0")
    wv = as_weights(omega)
    b = bernoulli_gf_coeffs(z, wv.omegas, m + wv.r + 1)
    # (-1)^m m! B_{m+r}(z, w) / (m+r)!  ==  (-1)^m m! b_{m+r}
    return (-1.0) ** m * math.factorial(m) * b[m + wv.r]


def barnes_zeta_deriv0(z, omega, pol: PrecisionPolicy = DEFAULT_POLICY):
    """d/ds zeta(s, z, w) at s = 0, from the split representation.

    With 1/Gamma(s) = s + gamma s^2 + O(s^3) and the series pole b_r/s
    separated off, the derivative collapses to

        gamma b_r + b_r log x0 + sum_{n != r} b_n x0^{n-r}/(n-r) + T(0),

    T(0) the upper integral at s = 0.
    """
    z = complex(z)
    wv = as_weights(omega)
    if wv.r == 0:
        if abs(z) < 1e-12:
            raise PoleError("log of zero")
        return -cmath.log(z)
    if z.real < _Z_QUAD_MIN:
        raise DomainError(f"derivative at 0 requires Re(z) >= {_Z_QUAD_MIN}")
    return _deriv0_cached(z, wv.omegas, pol)


@lru_cache(maxsize=16384)
def _deriv0_cached(z, ws, pol):
    r = len(ws)
    split = prepare_split(0.0 + 0.0j, z, ws, pol)
    b = bernoulli_gf_coeffs(z, ws, split.n_terms + 1)
    acc = EULER_GAMMA * b[r] + b[r] * math.log(split.x0)
    for n, bn in enumerate(b):
        if n != r:
            acc += bn * split.x0 ** (n - r) / (n - r)
    return acc + _tail_integral(0.0 + 0.0j, z, ws, split)


def multiple_gamma(z, omega, pol: PrecisionPolicy = DEFAULT_POLICY):
    """Multiple gamma Gamma(z, w) = exp(zeta'(0, z, w)).

    Direct evaluation needs Re(z) >= 1e-3; to the left the value is defined
    by the exact ladder Gamma(z, w) = Gamma(z, w') Gamma(z + w_r, w) with
    w' the weight prefix, bottoming out at Gamma(z, ()) = 1/z.  Poles sit on
    the mirrored lattice z in -Omega.
    """
    return _multiple_gamma_cached(complex(z), as_weights(omega).omegas, pol)


@lru_cache(maxsize=65536)
def _multiple_gamma_cached(z, ws, pol):
    if not ws:
        if abs(z) < 1e-12:
            raise PoleError("multiple gamma pole at a lattice point")
        return 1.0 / z
    if z.real >= _Z_QUAD_MIN:
        return cmath.exp(_deriv0_cached(z, ws, pol))
    left = _multiple_gamma_cached(z, ws[:-1], pol)
    right = _multiple_gamma_cached(z + ws[-1], ws, pol)
    return left * right


def multiple_sine(z, omega, pol: PrecisionPolicy = DEFAULT_POLICY):
    """Multiple sine S(z, w) = Gamma(z, w)^{-1} Gamma(|w| - z, w)^{(-1)^r}."""
    z = complex(z)
    wv = as_weights(omega)
    g1 = multiple_gamma(z, wv, pol)
    g2 = multiple_gamma(wv.total - z, wv, pol)
    if wv.r % 2 == 0:
        return g2 / g1
    return 1.0 / (g1 * g2)
