"""The explicit formula over zeta zeros and regularized product checks.

Two sides of one identity, for Re(z) > 1 and Re(s) > 1:

    sum_{rho} (z - rho)^{-s}
        = z^{-s} + (z-1)^{-s} - sum_{n>=0} (z+2n)^{-s}
          - Gamma(s)^{-1} sum_{n>=1} sum_p (log p) p^{-nz} (n log p)^{s-1},

with rho running over the nontrivial zeros paired with their conjugates.
The zero table is ingested, never computed.  The index of the prime sum
starts at n = 1: the n = 0 term would involve (log 1)^{s-1} and is
vacuous.  Truncation tails on both sides are certified (prime side) or
estimated from the zero-counting density (zero side) and carried in the
report instead of being silently absorbed.

The completed Riemann zeta is the entire closed form

    zhat(s) = 2^{-1/2} (2 pi)^{-2} s (s-1) pi^{-s/2} Gamma(s/2) zeta(s),

with the removable points s = 0, 1 and the trivial-zero/gamma-pole
cancellations at s = -2k filled by their limits.  It is the regularized
product of (s - rho)/2pi over the zeros and is invariant under s <-> 1-s.

For a finite sequence the product expression of the higher zeta factors per
element, so the verification below compares prod_lambda zhat(s + lambda)
against the literal (s+lambda)(s-1+lambda)/(2pi)^2 factors, the regularized
trivial-zero products, and Z(s, Lambda).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .barnes import barnes_zeta_deriv0, barnes_zeta_special_value
from .errors import (DomainError, OrderError, ParseError, TruncationError,
                     UnsupportedError)
from .kernel import (DEFAULT_POLICY, EULER_GAMMA, LOG_2PI, PrecisionPolicy,
                     hurwitz_zeta, log_gamma, riemann_zeta, sieve_bool)
from .sequences import ExplicitList, SequenceSpec, format_sequence, iter_lambdas
from .higher import (HigherZetaContext, higher_zeta,
                     log_zeta_product_tail_cert)

_SQRT2 = math.sqrt(2.0)
_ROSSER = 1.25506  # pi(x) < 1.25506 x / log x for x > 1


@dataclass(frozen=True)
class ZeroTable:
    """Ascending imaginary parts of zeros on the critical line."""

    gammas: tuple[float, ...]
    count: int
    source: str


def _parse_zero_lines(lines, source: str) -> ZeroTable:
    gammas: list[float] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) > 2:
            raise ParseError(f"{source}:{lineno}: too many columns")
        try:
            value = float(fields[-1])
        except ValueError as exc:
            raise ParseError(f"{source}:{lineno}: not a number: {fields[-1]!r}") from exc
        if not math.isfinite(value) or value <= 0.0:
            raise ParseError(f"{source}:{lineno}: zero ordinates must be positive")
        if gammas and value <= gammas[-1]:
            raise OrderError(f"{source}:{lineno}: ordinates must be ascending")
        gammas.append(value)
    if not gammas:
        raise ParseError(f"{source}: no zeros found")
    return ZeroTable(gammas=tuple(gammas), count=len(gammas), source=source)


def load_zeros(path) -> ZeroTable:
    """Read a zero table: one ordinate per line, optional index column,
    '#' comments.  Real part 1/2 is assumed by the format."""
    with open(path, "r", encoding="utf-8") as fh:
        return _parse_zero_lines(fh, str(path))


def default_zero_table() -> ZeroTable:
    """The packaged table of the first 1000 zeros."""
    text = resources.files("higherzeta").joinpath(
        "data/zeros_first_1000.txt").read_text(encoding="utf-8")
    return _parse_zero_lines(text.splitlines(), "builtin:zeros_first_1000")


def zero_sum(z, s, table: ZeroTable, Nz: int) -> complex:
    """sum over {1/2 +- i gamma_k, k <= Nz} of (z - rho)^{-s}."""
    z = complex(z)
    s = complex(s)
    if z.real <= 1.0:
        raise DomainError("zero_sum requires Re(z) > 1")
    if s.real <= 1.0:
        raise DomainError("zero_sum requires Re(s) > 1")
    if not 0 <= Nz <= table.count:
        raise DomainError(f"Nz must be in 0..{table.count}")
    if Nz == 0:
        return 0.0 + 0.0j
    g = np.asarray(table.gammas[:Nz])
    up = z - 0.5 - 1j * g
    dn = z - 0.5 + 1j * g
    return complex(np.exp(-s * np.log(up)).sum() + np.exp(-s * np.log(dn)).sum())


def zero_tail_estimate(s, gamma_max: float) -> float:
    """Density-based size estimate (factor-1.3 slack) of the dropped zeros."""
    sig = complex(s).real
    glog = math.log(gamma_max / (2.0 * math.pi))
    return (1.3 / math.pi) * gamma_max ** (1.0 - sig) / (sig - 1.0) \
        * (glog + 1.0 / (sig - 1.0))


def _prime_grid(prime_bound: int):
    is_p = sieve_bool(prime_bound)
    return np.log(np.nonzero(is_p)[0].astype(np.float64))


def _prime_sum_with_certs(z, s, prime_bound, n_bound, pol):
    """sum_{n>=1} sum_{p<=P} (log p) p^{-nz} (n log p)^{s-1} plus tail certs."""
    logp = _prime_grid(prime_bound)
    acc = 0.0 + 0.0j
    rez = z.real
    for n in range(1, n_bound + 1):
        if n * math.log(2.0) * rez > 60.0:
            break
        acc += complex((logp * np.exp(-n * z * logp)
                        * np.exp((s - 1.0) * np.log(n * logp))).sum())
    # tail over n > n_bound, computed from the first dropped row
    npow = n_bound + 1
    row = np.abs(logp * np.exp(-npow * z * logp)
                 * np.exp((s - 1.0) * np.log(npow * logp))).sum()
    q = 2.0 ** (-rez) * (1.0 + 1.0 / n_bound) ** max(s.real - 1.0, 0.0)
    n_cert = float(row) / (1.0 - q)
    # tail over p > P: (log t)^A t^-B decreasing past P once log P >= A/delta
    A = max(s.real, 0.0)
    delta = min(0.5, (rez - 1.0) / 2.0)
    lp = math.log(prime_bound)
    if lp < A / delta:
        raise TruncationError("prime bound too small for a certified tail")
    p_cert = 1.1 * lp ** A * prime_bound ** (1.0 - rez) / (rez - 1.0 - delta)
    return acc, p_cert, n_cert


def trivial_zero_sum(z, s, N_triv: int = 0,
                     pol: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """sum_{n>=0} (z+2n)^{-s}: N_triv explicit terms, Hurwitz remainder.

    The value is independent of N_triv, by the re-indexing identity
    sum_{n>=N} (z+2n)^{-s} = 2^{-s} zeta_H(s, z/2 + N).
    """
    if N_triv < 0:
        raise DomainError("N_triv must be nonnegative")
    z = complex(z)
    s = complex(s)
    acc = 0.0 + 0.0j
    for n in range(N_triv):
        acc += cmath.exp(-s * cmath.log(z + 2 * n))
    return acc + cmath.exp(-s * math.log(2.0)) \
        * hurwitz_zeta(s, z / 2.0 + N_triv, pol)


def explicit_formula_rhs(z, s, prime_bound: int, n_bound: int,
                         N_triv: int = 0,
                         pol: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """Right side of the explicit formula; raises TruncationError when the
    prime/n tail certificates cannot reach pol.eps_abs."""
    value, p_cert, n_cert = _rhs_with_certs(z, s, prime_bound, n_bound,
                                            N_triv, pol)
    if p_cert + n_cert > pol.eps_abs:
        raise TruncationError(
            f"certified tails {p_cert + n_cert:.3e} exceed eps_abs={pol.eps_abs}")
    return value


def _rhs_with_certs(z, s, prime_bound, n_bound, N_triv, pol):
    z = complex(z)
    s = complex(s)
    if z.real <= 1.0 or s.real <= 1.0:
        raise DomainError("explicit formula needs Re(z) > 1 and Re(s) > 1")
    if prime_bound < 2 or n_bound < 1:
        raise DomainError("prime_bound >= 2 and n_bound >= 1 required")
    val = cmath.exp(-s * cmath.log(z)) + cmath.exp(-s * cmath.log(z - 1.0))
    val -= trivial_zero_sum(z, s, N_triv, pol)
    psum, p_cert, n_cert = _prime_sum_with_certs(z, s, prime_bound, n_bound, pol)
    gamma_inv = cmath.exp(-log_gamma(s))
    val -= gamma_inv * psum
    scale = abs(gamma_inv)
    return val, p_cert * scale, n_cert * scale


@dataclass(frozen=True)
class ExplicitFormulaReport:
    """Both sides at one (z, s), with truncation bookkeeping."""

    z: complex
    s: complex
    lhs: complex
    rhs: complex
    residual: float
    Nz: int
    prime_bound: int
    n_bound: int
    prime_tail_cert: float
    n_tail_cert: float
    zero_tail_est: float
    source: str


def explicit_formula_report(z, s, table: ZeroTable, Nz: int,
                            prime_bound: int = 10 ** 6, n_bound: int = 40,
                            N_triv: int = 0,
                            pol: PrecisionPolicy = DEFAULT_POLICY
                            ) -> ExplicitFormulaReport:
    lhs = zero_sum(z, s, table, Nz)
    rhs, p_cert, n_cert = _rhs_with_certs(z, s, prime_bound, n_bound, N_triv, pol)
    gmax = table.gammas[Nz - 1] if Nz else table.gammas[0]
    return ExplicitFormulaReport(
        z=complex(z), s=complex(s), lhs=lhs, rhs=rhs,
        residual=abs(lhs - rhs), Nz=Nz, prime_bound=prime_bound,
        n_bound=n_bound, prime_tail_cert=p_cert, n_tail_cert=n_cert,
        zero_tail_est=zero_tail_estimate(s, gmax), source=table.source)


def completed_riemann_zeta(s, pol: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """zhat(s) = 2^{-1/2} (2pi)^{-2} s(s-1) pi^{-s/2} Gamma(s/2) zeta(s).

    Entire: s Gamma(s/2) is rewritten as 2 Gamma(s/2 + 1), the pole of zeta
    at 1 is cancelled against (s-1) by its Laurent series, and the gamma
    poles at s = -2k are cancelled against the trivial zeros by the limit
    -(2k)! zeta(2k+1) / ((k-1)! (2pi)^{2k}).
    """
    s = complex(s)
    front = _SQRT2 * (2.0 * math.pi) ** -2
    # removable point s = 1: (s-1) zeta(s) = 1 + gamma (s-1) + O((s-1)^2)
    if abs(s - 1.0) < 1e-8:
        pole_part = 1.0 + EULER_GAMMA * (s - 1.0)
        return front * pole_part * cmath.exp(-0.5 * s * cmath.log(math.pi)) \
            * cmath.exp(log_gamma(0.5 * s + 1.0))
    # removable points s = -2k: gamma pole against the trivial zero
    if abs(s.imag) < 1e-8 and s.real < -1.0:
        k = round(-s.real / 2.0)
        if k >= 1 and abs(s.real + 2.0 * k) < 1e-8:
            lim = -math.factorial(2 * k) \
                * riemann_zeta(2.0 * k + 1.0, pol).real \
                / (math.factorial(k - 1) * (2.0 * math.pi) ** (2 * k))
            return complex(front * (s.real - 1.0) * math.pi ** k * lim)
    return front * (s - 1.0) * cmath.exp(-0.5 * s * cmath.log(math.pi)) \
        * cmath.exp(log_gamma(0.5 * s + 1.0)) * riemann_zeta(s, pol)


def log_higher_zeta_prime_sum(z, spec: SequenceSpec, prime_bound: int,
                              n_bound: int,
                              pol: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """log Z(z, Lambda) = sum_lambda sum_p sum_n p^{-n(z+lambda)} / n.

    Certified truncation on all three indices; the prime tail uses the
    Rosser-Schoenfeld bound pi(x) < 1.25506 x / log x.
    """
    z = complex(z)
    logp = _prime_grid(prime_bound)
    lp = math.log(prime_bound)
    acc = 0.0 + 0.0j
    cert = 0.0
    finite = isinstance(spec, ExplicitList)
    for idx, lam in enumerate(iter_lambdas(spec, pol)):
        sig = (z + lam).real
        if sig <= 1.0:
            raise DomainError("needs Re(z + lambda) > 1 for every lambda")
        if not finite:
            # pay the whole remaining-lambda budget once it is affordable
            rest = log_zeta_product_tail_cert(spec, idx, z.real, lam.real)
            if rest <= pol.eps_abs * 0.5:
                cert += rest
                break
        w = z + lam
        for n in range(1, n_bound + 1):
            if n * sig * math.log(2.0) > 60.0:
                break
            acc += complex(np.exp(-n * w * logp).sum()) / n
        # per-lambda certificates: dropped n, dropped p
        cert += 2.0 ** (-(n_bound + 1) * sig) / (1.0 - 2.0 ** -sig)
        cert += _ROSSER * sig / ((sig - 1.0) * lp) * prime_bound ** (1.0 - sig)
    if cert > pol.eps_abs:
        raise TruncationError(
            f"certified tails {cert:.3e} exceed eps_abs={pol.eps_abs}")
    return acc


def regularized_dotted_over_2pi(w, pol: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """The dotted product of (w + 2n)/2pi over n >= 0.

    Equals (2pi)^{-zeta(0, w, (2))} exp(-zeta'(0, w, (2))); closed special
    value for the exponent, split continuation for the derivative.
    """
    expo = -barnes_zeta_special_value(0, w, (2.0,)) * LOG_2PI
    return cmath.exp(expo - barnes_zeta_deriv0(w, (2.0,), pol))


@dataclass(frozen=True)
class ProductExpressionReport:
    """Both sides of the regularized product expression for finite Lambda."""

    s: complex
    spec: str
    lhs: complex
    rhs: complex
    residual: float
    zero_source: str


def regularized_product_report(s, spec: SequenceSpec, table: ZeroTable,
                               pol: PrecisionPolicy = DEFAULT_POLICY
                               ) -> ProductExpressionReport:
    """Check prod_lambda zhat(s+lambda) against the gamma-factor form.

    Valid for finite sequences, where the doubly-indexed dotted product
    factors per element.  The zero side enters through the closed form of
    zhat (a raw truncated product over zeros diverges without
    regularization); the table is recorded as provenance.
    """
    s = complex(s)
    if not isinstance(spec, ExplicitList):
        raise UnsupportedError("product expression check: finite lists only")
    if s.real <= 1.0:
        raise DomainError("needs Re(s) > 1")
    lhs = 1.0 + 0.0j
    rhs = higher_zeta(s, HigherZetaContext(spec=spec, pol=pol))
    for lam in spec.values:
        w = s + lam
        lhs *= completed_riemann_zeta(w, pol)
        rhs *= (w / (2.0 * math.pi)) * ((w - 1.0) / (2.0 * math.pi))
        rhs /= regularized_dotted_over_2pi(w, pol)
    return ProductExpressionReport(
        s=s, spec=format_sequence(spec), lhs=lhs, rhs=rhs,
        residual=abs(lhs - rhs), zero_source=table.source)
