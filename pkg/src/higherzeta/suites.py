"""Identity-verification suites behind the CLI `verify` command.

Each suite evaluates one family of identities on a deterministic grid and
returns a SuiteResult: tabular rows (for CSV emission), a header, and the
pass flag.  Residuals are relative where the compared quantities are
products, absolute where a side can vanish.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .barnes import WeightVector, as_weights, multiple_gamma, multiple_sine
from .errors import DomainError
from .explicit import (ZeroTable, completed_riemann_zeta,
                       explicit_formula_report, regularized_product_report)
from .higher import (HigherZetaContext, dirichlet_coeffs, functional_product,
                     higher_zeta, lambda_hat, lattice_higher_zeta,
                     tauberian_check, zhat_any)
from .kernel import DEFAULT_POLICY, PrecisionPolicy, riemann_zeta
from .sequences import ExplicitList, SequenceSpec


@dataclass
class SuiteResult:
    name: str
    header: tuple[str, ...]
    rows: list[tuple]
    tolerance: float
    max_residual: float
    passed: bool


def _rel_residual(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def _finish(name, header, rows, tol, residuals) -> SuiteResult:
    worst = max(residuals) if residuals else 0.0
    return SuiteResult(name=name, header=header, rows=rows, tolerance=tol,
                       max_residual=worst, passed=worst <= tol)


def _points(n, lo, hi, imag_amp=0.2):
    """n points spread over (lo, hi) with alternating small imaginary part."""
    out = []
    for k in range(n):
        re = lo + (hi - lo) * (k + 0.5) / n
        im = imag_amp * (1 if k % 2 else -1) * (0.0 if n == 1 else 1.0)
        out.append(complex(re, im))
    return out


def ladder_points_gamma(omega: WeightVector, n: int):
    # keep Re(z) inside (0, 1) so every weight combination stays off poles
    return _points(n, 0.05, 0.95)


def suite_ladder_gamma(omega, n_points: int = 10,
                       pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """Gamma(z, w) = Gamma(z, w') Gamma(z + w_r, w)."""
    wv = as_weights(omega)
    rows, res = [], []
    for z in ladder_points_gamma(wv, n_points):
        lhs = multiple_gamma(z, wv, pol)
        rhs = multiple_gamma(z, wv.prefix(), pol) \
            * multiple_gamma(z + wv.omegas[-1], wv, pol)
        r = _rel_residual(lhs, rhs)
        rows.append((z.real, z.imag, lhs.real, lhs.imag, rhs.real, rhs.imag, r))
        res.append(r)
    return _finish("ladder-gamma",
                   ("z_re", "z_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                    "residual"), rows, 1e-7, res)


def suite_ladder_sine(omega, n_points: int = 10,
                      pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """S(z, w) = S(z, w') S(z + w_r, w)."""
    wv = as_weights(omega)
    rows, res = [], []
    for z in ladder_points_gamma(wv, n_points):
        lhs = multiple_sine(z, wv, pol)
        rhs = multiple_sine(z, wv.prefix(), pol) \
            * multiple_sine(z + wv.omegas[-1], wv, pol)
        r = _rel_residual(lhs, rhs)
        rows.append((z.real, z.imag, lhs.real, lhs.imag, rhs.real, rhs.imag, r))
        res.append(r)
    return _finish("ladder-sine",
                   ("z_re", "z_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                    "residual"), rows, 1e-7, res)


def suite_ccc(omega, n_points: int = 10,
              pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """Lattice ladder Z(s, w) = Z(s, w') Z(s + w_r, w)."""
    wv = as_weights(omega)
    ctx = HigherZetaContext(spec=ExplicitList((0.0,)), pol=pol)
    rows, res = [], []
    for s in _points(n_points, 1.5, 3.0, 0.3):
        lhs = lattice_higher_zeta(s, wv, ctx)
        rhs = lattice_higher_zeta(s, wv.prefix(), ctx) \
            * lattice_higher_zeta(s + wv.omegas[-1], wv, ctx)
        r = _rel_residual(lhs, rhs)
        rows.append((s.real, s.imag, lhs.real, lhs.imag, rhs.real, rhs.imag, r))
        res.append(r)
    return _finish("ccc",
                   ("s_re", "s_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                    "residual"), rows, 1e-6, res)


def suite_telescope(omega, s_values=(2.0, 2.5, 3.0),
                    pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """Alternating subset product of Z collapsing to zeta(s)."""
    from .higher import telescope_product
    wv = as_weights(omega)
    ctx = HigherZetaContext(spec=ExplicitList((0.0,)), pol=pol)
    rows, res = [], []
    for s in s_values:
        lhs = telescope_product(s, wv, ctx)
        rhs = riemann_zeta(complex(s), pol)
        r = _rel_residual(lhs, rhs)
        rows.append((complex(s).real, complex(s).imag, lhs.real, lhs.imag,
                     rhs.real, rhs.imag, r))
        res.append(r)
    return _finish("telescope",
                   ("s_re", "s_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                    "residual"), rows, 1e-6, res)


def suite_zhat_ladder(omega, n_points: int = 10,
                      pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """Zhat(s, w) = Zhat(s, w') Zhat(s + w_r, w)."""
    wv = as_weights(omega)
    ctx = HigherZetaContext(spec=ExplicitList((0.0,)), pol=pol)
    rows, res = [], []
    for s in _points(n_points, 1.5, 2.9, 0.2):
        lhs = zhat_any(s, wv, ctx)
        rhs = zhat_any(s, wv.prefix(), ctx) * zhat_any(s + wv.omegas[-1], wv, ctx)
        r = _rel_residual(lhs, rhs)
        rows.append((s.real, s.imag, lhs.real, lhs.imag, rhs.real, rhs.imag, r))
        res.append(r)
    return _finish("zhat-ladder",
                   ("s_re", "s_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                    "residual"), rows, 1e-6, res)


def suite_ddd(omega, n_points: int = 10,
              pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """Completed ladder lambda_hat(s,w) = lambda_hat(s,w') lambda_hat(s+w_r,w)."""
    wv = as_weights(omega)
    ctx = HigherZetaContext(spec=ExplicitList((0.0,)), pol=pol)
    rows, res = [], []
    for s in _points(n_points, 1.5, 2.9, 0.2):
        lhs = lambda_hat(s, wv, ctx)
        rhs = lambda_hat(s, wv.prefix(), ctx) * lambda_hat(s + wv.omegas[-1], wv, ctx)
        r = _rel_residual(lhs, rhs)
        rows.append((s.real, s.imag, lhs.real, lhs.imag, rhs.real, rhs.imag, r))
        res.append(r)
    return _finish("ddd",
                   ("s_re", "s_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                    "residual"), rows, 1e-6, res)


def suite_lambda_product(omega, n_points: int = 6,
                         pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """Alternating subset product of lambda_hat; identically 1."""
    wv = as_weights(omega)
    ctx = HigherZetaContext(spec=ExplicitList((0.0,)), pol=pol)
    rows, res = [], []
    for s in _points(n_points, 1.3, 2.8, 0.15):
        val = functional_product(s, wv, ctx)
        r = abs(val - 1.0)
        rows.append((s.real, s.imag, val.real, val.imag, r))
        res.append(r)
    return _finish("lambda-product",
                   ("s_re", "s_im", "product_re", "product_im", "residual"),
                   rows, 1e-5, res)


def suite_zhat_symmetry(n_re: int = 20, n_im: int = 10,
                        pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """zhat(s) = zhat(1-s) on a grid, residual normalized by 1 + |zhat|."""
    rows, res = [], []
    for i in range(n_re):
        re = -2.0 + 5.0 * i / (n_re - 1)
        for j in range(n_im):
            im = -5.0 + 10.0 * j / (n_im - 1) if n_im > 1 else 0.0
            s = complex(re, im)
            a = completed_riemann_zeta(s, pol)
            b = completed_riemann_zeta(1.0 - s, pol)
            r = abs(a - b) / (1.0 + abs(a))
            rows.append((re, im, a.real, a.imag, b.real, b.imag, r))
            res.append(r)
    return _finish("zhat-symmetry",
                   ("s_re", "s_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                    "residual"), rows, 1e-9, res)


def suite_aaa(table: ZeroTable, z=2.0, s=2.0, nz: int = 1000,
              prime_bound: int = 10 ** 6, n_bound: int = 40,
              pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """Explicit-formula residual trend over zero-count prefixes.

    Pass rule mirrors the convergence criterion: the full-table residual
    must be at most a third of the tenth-table residual and at most 1e-3.
    """
    if nz > table.count:
        raise DomainError(f"table holds {table.count} zeros, need {nz}")
    rows = []
    residuals = {}
    for frac in (nz // 10, nz // 2, nz):
        rep = explicit_formula_report(z, s, table, frac, prime_bound,
                                      n_bound, 0, pol)
        residuals[frac] = rep.residual
        rows.append((frac, rep.lhs.real, rep.lhs.imag, rep.rhs.real,
                     rep.rhs.imag, rep.residual, rep.prime_tail_cert,
                     rep.n_tail_cert, rep.zero_tail_est))
    ok = residuals[nz] <= residuals[nz // 10] / 3.0 and residuals[nz] <= 1e-3
    result = SuiteResult(
        name="aaa",
        header=("nz", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "residual",
                "prime_tail_cert", "n_tail_cert", "zero_tail_est"),
        rows=rows, tolerance=1e-3, max_residual=residuals[nz], passed=ok)
    return result


def suite_bbb(spec: SequenceSpec, table: ZeroTable, s=2.5,
              pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """Regularized product expression for a finite sequence."""
    rep = regularized_product_report(s, spec, table, pol)
    r = rep.residual
    rows = [(rep.s.real, rep.s.imag, rep.lhs.real, rep.lhs.imag,
             rep.rhs.real, rep.rhs.imag, r)]
    return _finish("bbb",
                   ("s_re", "s_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                    "residual"), rows, 1e-7, [r])


def suite_euler_dirichlet(spec: SequenceSpec, s=2.5, n_max: int = 10 ** 4,
                          tol: float = 1e-6,
                          pol: PrecisionPolicy = DEFAULT_POLICY) -> SuiteResult:
    """Euler product against the truncated Dirichlet series."""
    ctx = HigherZetaContext(spec=spec, pol=pol)
    s = complex(s)
    z = higher_zeta(s, ctx)
    table = dirichlet_coeffs(ctx, n_max)
    acc = 0.0 + 0.0j
    for n in range(1, n_max + 1):
        acc += table.g[n] * n ** (-s)
    r = abs(z - acc)
    rows = [(s.real, s.imag, z.real, z.imag, acc.real, acc.imag, r)]
    return _finish("euler-dirichlet",
                   ("s_re", "s_im", "euler_re", "euler_im", "series_re",
                    "series_im", "residual"), rows, tol, [r])


def suite_tauberian(spec: SequenceSpec, x: float = 10 ** 4,
                    pol: PrecisionPolicy = DEFAULT_POLICY):
    """Rows for the Tauberian partial-sum check (informational)."""
    ctx = HigherZetaContext(spec=spec, pol=pol)
    lhs, rhs = tauberian_check(ctx, x)
    return [(x, lhs, rhs, lhs / rhs)], ("x", "partial_sum", "asymptotic", "ratio")
