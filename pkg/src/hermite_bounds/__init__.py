"""Two-sided bounds on max |H_k(x)| exp(-x^2/2), extreme zeros, and exact certificates."""
from .airy import airy_A, airy_max, bessel_j, transition_asymptotic
from .envelope import (EnvelopeReport, MParam, SharpnessPoint, compute_Mk, envelope_F,
                       envelope_G, find_omega, log_Ck, lower_bound_point_value, m_param,
                       omega_upper, sharpness_point, theorem1_bounds)
from .hermite import HermiteState, eval_weighted, laguerre_expression, ode_residual, y_of
from .numeric_core import Bracket, ScaledValue, log_factorial, scaled_from_real, solve_bracketed
from .zeros import (ZeroBounds, ZeroSet, all_zeros, bethe_inequality_check, find_largest_zero,
                    largest_zero_bounds, zero_sum_identity_check)

__version__ = "0.1.0"
