"""Higher Riemann zeta functions and their completed forms.

For a sequence Lambda the higher zeta is the product over shifted Riemann
zetas, equivalently a double Euler product,

    Z(s, Lambda) = prod_k zeta(s + lambda_k)
                 = prod_k prod_p (1 - p^{-s-lambda_k})^{-1},

convergent for Re(s) > 1 - Re(lambda_0) and continued by splitting off
finitely many factors: the first j factors are evaluated through the scalar
zeta continuation and the remainder through exp(sum log zeta(s+lambda_k)),
truncated under a certified tail bound.

It also carries a Dirichlet series Z(s, Lambda) = sum g(n) n^{-s} whose
multiplicative coefficients are assembled from per-prime local factors

    prod_{lambda} (1 - p^{-lambda} X)^{-1}  (coefficient of X^m gives g(p^m)),

and a Tauberian asymptotic sum_{n<=x} g(n) ~ c x^{1-lambda_0} log^{K-1} x
with c = Z(1 - lambda_0, {lambda_k}_{k>=K}) / (K-1)!.

For a semi-lattice the completed form

    Zhat(s, w) = exp{(-B_r(s,w)/r! - B_r(s-1,w)/r!
                      + B_{r+1}(s,(2,w))/(r+1)!) log 2pi}
                 * Gamma(s,w)^{-1} Gamma(s-1,w)^{-1} Gamma(s,(2,w)) * Z(s,w)

satisfies the one-step ladder in r, and

    lambda_hat(s, w) = Zhat(s, w) * Zhat(1 + |w| - s, w)^{(-1)^{r+1}}

satisfies the alternating functional product over weight subsets.  Direct
evaluation of Zhat needs Re(s) > 1 (gamma-factor domains); lambda_hat
reaches smaller real parts through the exact ladder chain, which bottoms
out at the entire completed Riemann zeta.

The name lambda_hat avoids a collision between the classical notation for
this completed function and the sequence Lambda itself.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice

import numpy as np

from .barnes import WeightVector, as_weights, multiple_gamma
from .errors import (CapacityError, DivergenceError, DomainError, PoleError)
from .kernel import (DEFAULT_POLICY, LOG_2PI, PrecisionPolicy, riemann_zeta,
                     sieve_bool)
from .sequences import (ArithmeticProgression, ExplicitList, SemiLattice,
                        SequenceSpec, iter_lambdas)
from .series import PowerSeries, bernoulli_gf_coeffs, series_mul, series_one

_SPLIT_DELTA = 0.25       # head/tail margin for the factor split
_ZHAT_MARGIN = 1e-3       # direct Zhat needs Re(s) > 1 + this


@dataclass(frozen=True)
class HigherZetaContext:
    """Sequence plus the numeric knobs shared by the operations here."""

    spec: SequenceSpec
    prime_bound: int = 100_000
    pol: PrecisionPolicy = DEFAULT_POLICY

    def __post_init__(self):
        if self.prime_bound < 2:
            raise DomainError("prime_bound must be at least 2")


@dataclass(frozen=True)
class CoeffTable:
    """Dirichlet coefficients g(1)..g(n_max); index 0 is unused padding."""

    n_max: int
    g: tuple[complex, ...]

    def value(self, n: int) -> complex:
        if not 1 <= n <= self.n_max:
            raise DomainError(f"coefficient index {n} out of range")
        return self.g[n]


def _tail_factor(spec: SequenceSpec, j: int) -> tuple[float, float]:
    """(Re(lambda_j), closed form of sum_{k>=j} 2^{-(Re l_k - Re l_j)})."""
    if isinstance(spec, ExplicitList):
        vals = spec.values[j:]
        if not vals:
            return 0.0, 0.0
        lj = vals[0].real
        return lj, sum(2.0 ** (-(v.real - lj)) for v in vals)
    if isinstance(spec, ArithmeticProgression):
        lj = (j + spec.offset) * spec.l.real
        return lj, 1.0 / (1.0 - 2.0 ** (-spec.l.real))
    lam = next(islice(iter_lambdas(spec), j, None))
    # 2^{-(l_k - l_j)} <= 2^{l_j/2} 2^{-l_k/2} over the whole lattice,
    # whose half-exponent sum has the closed product form below
    factor = 1.0
    for w in spec.omega.omegas:
        factor /= 1.0 - 2.0 ** (-0.5 * w.real)
    return lam.real, factor * min(2.0 ** (0.5 * lam.real), 1e300)


def tail_bound(spec: SequenceSpec, j: int, x: float) -> float:
    """Certified bound for |sum_{k>=j} x^{-lambda_k}|, x >= 2.

    The bound is x^{-Re(lambda_j)} times a closed-form evaluation of
    sum_{k>=j} 2^{-(Re lambda_k - Re lambda_j)}, per sequence shape.
    """
    if x < 2.0:
        raise DomainError("tail_bound requires x >= 2")
    if j < 0:
        raise DomainError("j must be nonnegative")
    lj, factor = _tail_factor(spec, j)
    return x ** (-lj) * factor


def _prime_zeta_upper(sigma: float) -> float:
    """Upper bound for sum_p p^-sigma, sigma > 1."""
    return 2.0 ** -sigma + 3.0 ** -sigma + 3.0 ** (1.0 - sigma) / (sigma - 1.0)


def log_zeta_abs_bound(sigma: float) -> float:
    """Upper bound for |log zeta(w)| on Re(w) = sigma > 1."""
    if sigma <= 1.0:
        raise DomainError("bound valid only for sigma > 1")
    return _prime_zeta_upper(sigma) + _prime_zeta_upper(2.0 * sigma)


def log_zeta_product_tail_cert(spec, k, res, relam):
    """Certified bound for the unprocessed |sum_{i>=k} log zeta(s+lambda_i)|.

    |log zeta(sigma_i)| <= bound(sigma_k) 2^{sigma_k - sigma_i} for
    sigma_i >= sigma_k (the ratio bound(sigma) 2^sigma is decreasing), and
    the remaining 2^{-(lambda_i - lambda_k)} sum has a closed form.
    """
    sigma = res + relam
    if sigma <= 1.0 + _SPLIT_DELTA * 0.5:
        return math.inf
    lj, factor = _tail_factor(spec, k)
    return log_zeta_abs_bound(sigma) * factor


def _two_theta(spec) -> float:
    """sum over the whole sequence of 2^{-Re lambda}, in closed form."""
    if isinstance(spec, ExplicitList):
        return sum(2.0 ** (-v.real) for v in spec.values)
    if isinstance(spec, ArithmeticProgression):
        rl = spec.l.real
        return 2.0 ** (-rl * spec.offset) / (1.0 - 2.0 ** -rl)
    v = 1.0
    for w in spec.omega.omegas:
        v /= 1.0 - 2.0 ** (-w.real)
    return v


def _log_zeta_ratio(sigma: float) -> float:
    """Decreasing majorant of |log zeta| relative to 2^{-sigma}."""
    s = min(sigma, 50.0)
    return log_zeta_abs_bound(s) * 2.0 ** s


def _zeta_product_from(s, spec, k0, pol, extra_head=0):
    """prod_{k>=k0} zeta(s + lambda_k) with split continuation.

    The unprocessed remainder is certified through the running theta sum:
    sum_{k>=K} |log zeta(s+lambda_k)| <= ratio(sigma_K) 2^{-Re s}
    (Theta_2 - sum_{k<K} 2^{-Re lambda_k}), Theta_2 the closed-form total.
    """
    s = complex(s)
    head = 1.0 + 0.0j
    logsum = 0.0 + 0.0j
    quiet_run = 0
    in_tail = False
    theta2 = _two_theta(spec)
    seen = 0.0
    for idx, lam in enumerate(iter_lambdas(spec, pol)):
        if idx < k0:
            seen += 2.0 ** (-lam.real)
            continue
        if idx - k0 > 400_000:
            raise DivergenceError("factor split did not stabilize")
        w = s + lam
        if abs(w - 1.0) < 1e-12:
            raise PoleError(f"higher zeta factor pole: s + {lam} = 1")
        if not in_tail:
            if w.real <= 1.0 + _SPLIT_DELTA or extra_head > 0:
                if w.real > 1.0 + _SPLIT_DELTA:
                    extra_head -= 1
                head *= riemann_zeta(w, pol)
                seen += 2.0 ** (-lam.real)
                continue
            in_tail = True
        if quiet_run >= 3:
            remaining = max(0.0, theta2 - seen) + 1e-15 * (idx + 1)
            cert = _log_zeta_ratio(w.real) * 2.0 ** (-s.real) * remaining
            if cert <= pol.eps_abs:
                break
        lz = cmath.log(riemann_zeta(w, pol))
        logsum += lz
        seen += 2.0 ** (-lam.real)
        quiet_run = quiet_run + 1 if abs(lz) < pol.eps_abs * 0.1 else 0
    return head * cmath.exp(logsum)


def higher_zeta(s, ctx: HigherZetaContext, *, extra_head: int = 0) -> complex:
    """Z(s, Lambda), continued in s off the pole set {1 - lambda_k}."""
    s = complex(s)
    spec = ctx.spec
    if isinstance(spec, ExplicitList):
        # finite product; extra_head is only meaningful for infinite shapes
        val = 1.0 + 0.0j
        for lam in spec.values:
            w = s + lam
            if abs(w - 1.0) < 1e-12:
                raise PoleError(f"higher zeta factor pole: s + {lam} = 1")
            val *= riemann_zeta(w, ctx.pol)
        return val
    return _zeta_product_from(s, spec, 0, ctx.pol, extra_head)


@lru_cache(maxsize=65536)
def _lattice_Z_cached(s, ws, pol):
    if not ws:
        return riemann_zeta(s, pol)
    return _zeta_product_from(s, SemiLattice(WeightVector(ws)), 0, pol)


def lattice_higher_zeta(s, omega, ctx: HigherZetaContext) -> complex:
    """Z(s, w): the higher zeta of the semi-lattice generated by w."""
    return _lattice_Z_cached(complex(s), as_weights(omega).omegas, ctx.pol)


def default_r_cut(n_max: int, pol: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """Real-part cutoff: dropped lambda perturb coefficients below eps_abs."""
    return (math.log(max(n_max, 2)) + abs(math.log(pol.eps_abs))) / math.log(2.0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def dirichlet_local_factor(p: int, spec: SequenceSpec, M: int, R_cut: float,
                           pol: PrecisionPolicy = DEFAULT_POLICY) -> PowerSeries:
    """Local Euler factor prod_{Re lambda <= R_cut} (1 - p^{-lambda} X)^{-1}.

    Returned to order M; the coefficient of X^m is g(p^m).
    """
    if not _is_prime(p):
        raise DomainError(f"{p} is not prime")
    if M < 1:
        raise DomainError("M must be at least 1")
    from .sequences import enumerate_up_to
    acc = series_one(M + 1)
    logp = math.log(p)
    for lam in enumerate_up_to(spec, R_cut, pol):
        c = cmath.exp(-lam * logp)
        geom = []
        v = 1.0 + 0.0j
        for _ in range(M + 1):
            geom.append(v)
            v *= c
        acc = series_mul(acc, PowerSeries(tuple(geom)))
    return acc


def dirichlet_coeffs(ctx: HigherZetaContext, n_max: int) -> CoeffTable:
    """g(n) for n <= n_max, assembled multiplicatively from local factors."""
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    if n_max > ctx.pol.max_terms * 10 ** 6:
        raise CapacityError("coefficient table exceeds the configured cap")
    r_cut = default_r_cut(n_max, ctx.pol)
    if n_max == 1:
        return CoeffTable(1, (0.0j, 1.0 + 0.0j))
    # smallest prime factor sieve
    spf = np.zeros(n_max + 1, dtype=np.int64)
    for p in range(2, n_max + 1):
        if spf[p] == 0:
            view = spf[p::p]
            view[view == 0] = p
    g = np.zeros(n_max + 1, dtype=complex)
    g[1] = 1.0
    local: dict[int, tuple[complex, ...]] = {}
    for n in range(2, n_max + 1):
        p = int(spf[n])
        m, v = n, 0
        while m % p == 0:
            m //= p
            v += 1
        if p not in local:
            mp = max(1, int(math.log(n_max) / math.log(p)) + 1)
            local[p] = dirichlet_local_factor(p, ctx.spec, mp, r_cut, ctx.pol).coeffs
        g[n] = g[m] * local[p][v]
    return CoeffTable(n_max, tuple(complex(v) for v in g))


def _require_real(spec: SequenceSpec):
    tol = 1e-12
    if isinstance(spec, ExplicitList):
        bad = any(abs(v.imag) > tol for v in spec.values)
    elif isinstance(spec, ArithmeticProgression):
        bad = abs(spec.l.imag) > tol
    else:
        bad = any(abs(w.imag) > tol for w in spec.omega.omegas)
    if bad:
        raise DomainError("the Tauberian asymptotic needs a real sequence")


def tauberian_constant(ctx: HigherZetaContext) -> tuple[complex, int, float]:
    """(c, K, lambda_0) of the partial-sum asymptotic of the coefficients.

    K is the multiplicity of the minimal value lambda_0 and
    c = Z(1 - lambda_0, {lambda_k}_{k >= K}) / (K-1)!.
    """
    _require_real(ctx.spec)
    stream = iter_lambdas(ctx.spec, ctx.pol)
    lam0 = next(stream).real
    K = 1
    if isinstance(ctx.spec, ExplicitList):
        for v in ctx.spec.values[1:]:
            if abs(v.real - lam0) > 1e-12:
                break
            K += 1
    c = _zeta_product_from(1.0 - lam0, ctx.spec, K, ctx.pol) / math.factorial(K - 1)
    return c, K, lam0


def tauberian_check(ctx: HigherZetaContext, x: float) -> tuple[float, float]:
    """(partial coefficient sum up to x, c * x^{1-lambda_0} log^{K-1} x)."""
    if x < 100.0:
        raise DomainError("tauberian_check requires x >= 100")
    c, K, lam0 = tauberian_constant(ctx)
    table = dirichlet_coeffs(ctx, int(x))
    acc = sum(table.g[1:])
    lhs = acc.real
    rhs = c.real * x ** (1.0 - lam0) * math.log(x) ** (K - 1)
    return lhs, rhs


# ---------------- completed lattice zeta and the functional identity -------

def _zhat_direct(s, ws, pol):
    r = len(ws)
    two_ws = (2.0 + 0.0j,) + ws
    b_s = bernoulli_gf_coeffs(s, ws, r + 1)[r]
    b_s1 = bernoulli_gf_coeffs(s - 1.0, ws, r + 1)[r]
    b_2w = bernoulli_gf_coeffs(s, two_ws, r + 2)[r + 1]
    expo = (-b_s - b_s1 + b_2w) * LOG_2PI
    val = cmath.exp(expo)
    val /= multiple_gamma(s, ws, pol)
    val /= multiple_gamma(s - 1.0, ws, pol)
    val *= multiple_gamma(s, two_ws, pol)
    return val * _lattice_Z_cached(s, ws, pol)


def completed_lattice_zeta(s, omega, ctx: HigherZetaContext) -> complex:
    """Zhat(s, w): gamma-completed lattice higher zeta, direct domain only.

    Needs Re(s) > 1 (strictly, by the margin 1e-3): the gamma factors live
    on Re(s) > 0 and Re(s-1) > 0.  lambda_hat extends leftward through the
    ladder chain; this entry point does not.
    """
    s = complex(s)
    if s.real <= 1.0 + _ZHAT_MARGIN:
        raise DomainError(
            f"completed lattice zeta needs Re(s) > 1 + {_ZHAT_MARGIN}")
    return _zhat_direct(s, as_weights(omega).omegas, ctx.pol)


@lru_cache(maxsize=65536)
def _zhat_chain(s, ws, pol):
    """Zhat at any s: direct where the gamma factors converge, otherwise
    resolved through the exact ladder Zhat(s,w) = Zhat(s,w') Zhat(s+w_r,w),
    whose base r = 0 is the entire completed Riemann zeta."""
    if not ws:
        from .explicit import completed_riemann_zeta
        return completed_riemann_zeta(s, pol)
    if s.real > 1.0 + _ZHAT_MARGIN:
        return _zhat_direct(s, ws, pol)
    return _zhat_chain(s, ws[:-1], pol) * _zhat_chain(s + ws[-1], ws, pol)


def zhat_any(s, omega, ctx: HigherZetaContext) -> complex:
    """Zhat(s, w) with the ladder-chain extension to Re(s) <= 1."""
    return _zhat_chain(complex(s), as_weights(omega).omegas, ctx.pol)


def lambda_hat(s, omega, ctx: HigherZetaContext) -> complex:
    """lambda_hat(s,w) = Zhat(s,w) * Zhat(1 + |w| - s, w)^{(-1)^{r+1}}."""
    s = complex(s)
    wv = as_weights(omega)
    a = _zhat_chain(s, wv.omegas, ctx.pol)
    b = _zhat_chain(1.0 + wv.total - s, wv.omegas, ctx.pol)
    if (wv.r + 1) % 2 == 0:
        return a * b
    return a / b


def _subset_sums(ws):
    for j in range(1, len(ws) + 1):
        for combo in combinations(ws, j):
            yield j, sum(combo, 0.0 + 0.0j)


def telescope_product(s, omega, ctx: HigherZetaContext) -> complex:
    """Z(s,w) * prod_{subsets} Z(s + sum, w)^{(-1)^j}; equals zeta(s)."""
    wv = as_weights(omega)
    val = lattice_higher_zeta(s, wv, ctx)
    for j, shift in _subset_sums(wv.omegas):
        f = lattice_higher_zeta(complex(s) + shift, wv, ctx)
        val = val / f if j % 2 else val * f
    return val


def functional_product(s, omega, ctx: HigherZetaContext) -> complex:
    """lambda_hat(s,w) * prod_{subsets} lambda_hat(s + sum, w)^{(-1)^j}.

    Identically 1; the numeric value measures the joint consistency of the
    ladder chain and the s <-> 1-s symmetry of the completed zeta.
    """
    wv = as_weights(omega)
    val = lambda_hat(s, wv, ctx)
    for j, shift in _subset_sums(wv.omegas):
        f = lambda_hat(complex(s) + shift, wv, ctx)
        val = val / f if j % 2 else val * f
    return val
