"""Link-homotopy invariants sigma and omega from combinatorial link-map data."""

from .errors import (DivisionFailed, DivisorZeroError, GenerationExhausted, InvariantViolation,
                     LinkInvError, NotDivisibleError, NotInImageError, NotInSpanError,
                     NotSigmaShapedError, ParseError, RingMismatchError, SchemaError)
from .laurent import (LaurentPoly, S, bar, eval_at_one, exact_divide_mod2, format_poly,
                      formal_derivative, lift, mul, parse_poly, phi, reduce_mod2)
from .linkmap import (ConstructedDiskWitness, DoublePoint, Handle, LinkMapModel,
                      WhitneyDiskDatum, l_minus, omega_from_witness, omega_minus, sigma,
                      sigma_via_mu, validate, whitney_circle_lk)
from .theorem import (KirkDecomposition, ThetaCoefficients, TheoremVerdict, kirk_compose,
                      kirk_decompose, lambda_n_decompose, predicted_omega, replay,
                      symmetric_span_solve, theorem_coeffs)

__version__ = "0.1.0"
