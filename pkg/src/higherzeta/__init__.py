"""Higher Riemann zeta functions, Barnes multiple gamma/sine functions, and
zeta-regularized products, with numeric verification of their identities."""

from .errors import (CapacityError, ContinuationError, DivergenceError,
                     DomainError, HigherZetaError, NearPoleError, OrderError,
                     ParseError, PoleError, ShapeError, TruncationError,
                     UnsupportedError)
from .kernel import (DEFAULT_POLICY, EULER_GAMMA, PrecisionPolicy, PrimeList,
                     complex_power, hurwitz_zeta, log_gamma, primes_up_to,
                     riemann_zeta)
from .series import (BernoulliTable, PowerSeries, bernoulli_gf_coeffs,
                     multiple_bernoulli, series_from, series_inv, series_mul,
                     series_one)
from .barnes import (MellinSplit, WeightVector, barnes_zeta,
                     barnes_zeta_deriv0, barnes_zeta_special_value,
                     multiple_gamma, multiple_sine, prepare_split)
from .sequences import (ArithmeticProgression, ExplicitList, SemiLattice,
                        SequenceSpec, ThetaExpansion, dotted_product,
                        enumerate_up_to, parse_complex, parse_sequence,
                        seq_zeta, sum_spec, theta, theta_expansion)
from .higher import (CoeffTable, HigherZetaContext, completed_lattice_zeta,
                     dirichlet_coeffs, dirichlet_local_factor,
                     functional_product, higher_zeta, lambda_hat,
                     lattice_higher_zeta, tail_bound, tauberian_check,
                     tauberian_constant, telescope_product, zhat_any)
from .explicit import (ExplicitFormulaReport, ProductExpressionReport,
                       ZeroTable, completed_riemann_zeta, default_zero_table,
                       explicit_formula_report, explicit_formula_rhs,
                       load_zeros, log_higher_zeta_prime_sum,
                       regularized_product_report, trivial_zero_sum,
                       zero_sum)

__version__ = "0.1.0"
