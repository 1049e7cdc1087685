"""Declarative sequence specifications and zeta-regularized products.

A sequence Lambda = {lambda_k} enters every higher-level object through one
of three concrete shapes:

* ExplicitList        -- finitely many values, multiplicities allowed
* ArithmeticProgression -- lambda_n = l*n or l*(n+1)
* SemiLattice         -- {n_1 w_1 + .. + n_r w_r : n_j >= 0}

All three are regularizable by construction: real parts are nonnegative and
tend to infinity, the associated theta function

    Theta(x, Lambda) = sum_k e^{-lambda_k x}

has a closed form, and its x -> 0+ expansion has purely constant coefficient
polynomials (no log terms arise for these shapes; inputs that would need
them are rejected rather than half-supported).

The dotted regularized product of (z + lambda_k) is

    exp( - CT_{s=0} zeta(s, z, Lambda)/s ),

the constant Laurent term at s = 0.  For every supported shape the
generalized zeta zeta(s, z, Lambda) is regular at s = 0, so the constant
term is just the s-derivative there and the product reduces to
exp(-zeta'(0, z, Lambda)); the pole-at-zero branch of the definition is
unreachable here and the code asserts that.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Iterator, Union

from .barnes import WeightVector, barnes_zeta, barnes_zeta_deriv0
from .errors import (CapacityError, DomainError, ParseError, UnsupportedError)
from .kernel import DEFAULT_POLICY, PrecisionPolicy, complex_power
from .series import bernoulli_gf_coeffs


def _sort_key(v: complex):
    return (v.real, v.imag)


@dataclass(frozen=True)
class ExplicitList:
    """A finite sequence; values kept sorted by (Re, Im), ascending."""

    values: tuple[complex, ...]

    def __post_init__(self):
        vals = tuple(sorted((complex(v) for v in self.values), key=_sort_key))
        if any(v.real < 0.0 for v in vals):
            raise DomainError("sequence values must have nonnegative real part")
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class ArithmeticProgression:
    """lambda_n = l*(n + offset) for n >= 0, offset in {0, 1}."""

    l: complex
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "l", complex(self.l))
        if self.l.real <= 0.0:
            raise DomainError("progression step must have positive real part")
        if self.offset not in (0, 1):
            raise DomainError("offset must be 0 or 1")


@dataclass(frozen=True)
class SemiLattice:
    """All nonnegative integer combinations of the weight vector."""

    omega: WeightVector

    def __post_init__(self):
        wv = self.omega if isinstance(self.omega, WeightVector) else WeightVector(tuple(self.omega))
        if wv.r < 1:
            raise DomainError("a semi-lattice needs at least one weight")
        object.__setattr__(self, "omega", wv)


SequenceSpec = Union[ExplicitList, ArithmeticProgression, SemiLattice]


@dataclass(frozen=True)
class ThetaExpansion:
    """Small-x expansion Theta(x) ~ sum_n T_n x^{t_n}; constant T_n only."""

    exponents: tuple[float, ...]
    polys: tuple[tuple[complex, ...], ...]

    def __post_init__(self):
        if self.exponents and self.exponents[0] > 0.0:
            raise DomainError("leading exponent must be <= 0")
        if any(b <= a for a, b in zip(self.exponents, self.exponents[1:])):
            raise DomainError("exponents must be strictly ascending")


def _as_lattice_weights(spec) -> tuple[complex, ...] | None:
    """Weights if the spec is a plain semi-lattice (origin included)."""
    if isinstance(spec, SemiLattice):
        return spec.omega.omegas
    if isinstance(spec, ArithmeticProgression) and spec.offset == 0:
        return (spec.l,)
    return None


def enumerate_up_to(spec: SequenceSpec, R: float,
                    pol: PrecisionPolicy = DEFAULT_POLICY) -> list[complex]:
    """All lambda with Re(lambda) <= R, with multiplicity, (Re, Im)-sorted."""
    if R < 0:
        raise DomainError("R must be nonnegative")
    cap = pol.max_terms * 10 ** 6
    if isinstance(spec, ExplicitList):
        out = [v for v in spec.values if v.real <= R]
    elif isinstance(spec, ArithmeticProgression):
        out = []
        k = 0
        while (k + spec.offset) * spec.l.real <= R:
            out.append(spec.l * (k + spec.offset))
            k += 1
            if len(out) > cap:
                raise CapacityError("enumeration exceeds the configured cap")
    else:
        ws = spec.omega.omegas
        out = []

        def rec(idx, acc):
            if idx == len(ws):
                out.append(acc)
                if len(out) > cap:
                    raise CapacityError("enumeration exceeds the configured cap")
                return
            w = ws[idx]
            v = acc
            while v.real <= R:
                rec(idx + 1, v)
                v += w

        rec(0, 0.0 + 0.0j)
    return sorted(out, key=_sort_key)


def iter_lambdas(spec: SequenceSpec,
                 pol: PrecisionPolicy = DEFAULT_POLICY) -> Iterator[complex]:
    """Sequence elements in ascending real-part order, with multiplicity."""
    if isinstance(spec, ExplicitList):
        yield from spec.values
        return
    if isinstance(spec, ArithmeticProgression):
        k = 0
        while True:
            yield spec.l * (k + spec.offset)
            k += 1
    else:
        # enumerate in doubling windows; a batch up to `reach` is complete,
        # so everything past the previous cut is new
        reach = 8.0 * max(w.real for w in spec.omega.omegas)
        prev = -1.0
        while True:
            batch = enumerate_up_to(spec, reach, pol)
            yield from (v for v in batch if v.real > prev)
            prev = reach
            reach *= 2.0


def theta(x: float, spec: SequenceSpec,
          pol: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """Theta(x, Lambda) = sum_k e^{-lambda_k x} for x > 0."""
    if x <= 0.0:
        raise DomainError("theta requires x > 0")
    if isinstance(spec, ExplicitList):
        return sum(cmath.exp(-v * x) for v in spec.values)
    if isinstance(spec, ArithmeticProgression):
        q = cmath.exp(-spec.l * x)
        return q ** spec.offset / (1.0 - q)
    v = 1.0 + 0.0j
    for w in spec.omega.omegas:
        v /= 1.0 - cmath.exp(-w * x)
    return v


def theta_expansion(spec: SequenceSpec, N: int,
                    pol: PrecisionPolicy = DEFAULT_POLICY) -> ThetaExpansion:
    """First N+1 terms of the x -> 0+ expansion of Theta(x, Lambda)."""
    if N < 0:
        raise DomainError("N must be nonnegative")
    if isinstance(spec, ExplicitList):
        exps = tuple(float(n) for n in range(N + 1))
        polys = []
        for n in range(N + 1):
            c = sum((-v) ** n for v in spec.values) / math.factorial(n)
            polys.append((complex(c),))
        return ThetaExpansion(exps, tuple(polys))
    if isinstance(spec, ArithmeticProgression):
        # e^{-l*offset*x}/(1-e^{-lx}) = sum_n b_n(offset*l, (l)) x^{n-1}
        b = bernoulli_gf_coeffs(spec.l * spec.offset, (spec.l,), N + 1)
        exps = tuple(float(n - 1) for n in range(N + 1))
        return ThetaExpansion(exps, tuple((complex(c),) for c in b))
    ws = spec.omega.omegas
    r = len(ws)
    b = bernoulli_gf_coeffs(0.0 + 0.0j, ws, N + 1)
    exps = tuple(float(n - r) for n in range(N + 1))
    return ThetaExpansion(exps, tuple((complex(c),) for c in b))


def seq_zeta(s, z, spec: SequenceSpec,
             pol: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """zeta(s, z, Lambda) = sum_k (z + lambda_k)^{-s}, continued in s."""
    s = complex(s)
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError("seq_zeta requires Re(z) > 0")
    if isinstance(spec, ExplicitList):
        return sum(complex_power(z + v, -s) for v in spec.values)
    if isinstance(spec, ArithmeticProgression):
        return barnes_zeta(s, z + spec.l * spec.offset, (spec.l,), pol)
    return barnes_zeta(s, z, spec.omega, pol)


def dotted_product(z, spec: SequenceSpec,
                   pol: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """The dotted regularized product of (z + lambda_k) over the sequence.

    For the supported shapes zeta(., z, Lambda) is regular at s = 0, so this
    is exp(-zeta'(0, z, Lambda)); a finite list degenerates to the literal
    product.
    """
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError("dotted_product requires Re(z) > 0")
    if isinstance(spec, ExplicitList):
        prod = 1.0 + 0.0j
        for v in spec.values:
            prod *= z + v
        return prod
    if isinstance(spec, ArithmeticProgression):
        return cmath.exp(-barnes_zeta_deriv0(z + spec.l * spec.offset,
                                             (spec.l,), pol))
    return cmath.exp(-barnes_zeta_deriv0(z, spec.omega, pol))


def sum_spec(a: SequenceSpec, b: SequenceSpec) -> SequenceSpec:
    """The Minkowski-sum sequence {a_m + b_n}.

    Theta multiplies under this composition, which pins the representation:
    finite + finite stays finite, lattice + lattice concatenates weights, and
    a singleton {0} is the identity.  Anything else has no representation
    among the supported shapes.
    """
    if isinstance(a, ExplicitList) and a.values == (0j,):
        return b
    if isinstance(b, ExplicitList) and b.values == (0j,):
        return a
    if isinstance(a, ExplicitList) and isinstance(b, ExplicitList):
        return ExplicitList(tuple(x + y for x in a.values for y in b.values))
    wa = _as_lattice_weights(a)
    wb = _as_lattice_weights(b)
    if wa is not None and wb is not None:
        return SemiLattice(WeightVector(wa + wb))
    raise UnsupportedError(
        "no supported representation for this Minkowski sum")


# --- textual grammar: list:a,b,c | ap:l=<c>[,offset=0|1] | lattice:c,c,... ---

_COMPLEX_RE = re.compile(r"^[0-9+\-.eEij]+$")


def parse_complex(text: str) -> complex:
    """Complex literal in the grammar's 'i' notation: 1.5, 0.3i, 1+2i."""
    t = text.strip()
    if not t or not _COMPLEX_RE.match(t):
        raise ParseError(f"bad complex literal: {text!r}")
    try:
        v = complex(t.replace("i", "j"))
    except ValueError as exc:
        raise ParseError(f"bad complex literal: {text!r}") from exc
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise ParseError(f"non-finite literal: {text!r}")
    return v


def parse_sequence(text: str) -> SequenceSpec:
    """Parse the sequence grammar shared with the CLI."""
    t = text.strip()
    head, sep, rest = t.partition(":")
    if not sep:
        raise ParseError(f"sequence spec needs a 'kind:' prefix: {text!r}")
    if head == "list":
        parts = [p for p in rest.split(",") if p.strip()]
        if not parts:
            raise ParseError("empty list spec")
        return ExplicitList(tuple(parse_complex(p) for p in parts))
    if head == "ap":
        l = None
        offset = 0
        for item in rest.split(","):
            item = item.strip()
            if not item:
                continue
            key, eq, val = item.partition("=")
            if not eq:
                raise ParseError(f"ap spec items must be key=value: {item!r}")
            if key == "l":
                l = parse_complex(val)
            elif key == "offset":
                if val not in ("0", "1"):
                    raise ParseError("offset must be 0 or 1")
                offset = int(val)
            else:
                raise ParseError(f"unknown ap key: {key!r}")
        if l is None:
            raise ParseError("ap spec needs l=<complex>")
        return ArithmeticProgression(l=l, offset=offset)
    if head == "lattice":
        parts = [p for p in rest.split(",") if p.strip()]
        if not parts:
            raise ParseError("empty lattice spec")
        return SemiLattice(WeightVector(tuple(parse_complex(p) for p in parts)))
    raise ParseError(f"unknown sequence kind: {head!r}")


def format_sequence(spec: SequenceSpec) -> str:
    """Inverse of parse_sequence, good enough for reports."""
    def fmt(v: complex) -> str:
        if v.imag == 0.0:
            return repr(v.real)
        return f"{v.real!r}{'+' if v.imag >= 0 else '-'}{abs(v.imag)!r}i"

    if isinstance(spec, ExplicitList):
        return "list:" + ",".join(fmt(v) for v in spec.values)
    if isinstance(spec, ArithmeticProgression):
        return f"ap:l={fmt(spec.l)},offset={spec.offset}"
    return "lattice:" + ",".join(fmt(w) for w in spec.omega.omegas)
