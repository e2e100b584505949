"""Exact rational polynomial engine and positivity certificates."""
from .certify import (Certificate, all_certificates, build_U, certify_shift_positivity,
                      certify_v2_with_reparam, derive_monotonicity_numerator)
from .multipoly import MultiPoly
from .sturm import sturm_root_count
