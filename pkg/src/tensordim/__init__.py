"""Krull dimension and prime heights of tensor products of algebras over a field."""

from .poly import DEFAULT_ORDER, MonomialOrder, Polynomial, compare_monomials, s_polynomial
from .groebner import (AlgebraPresentation, EmptySpectrum, NotPrime, buchberger,
                       ideal_dimension, normal_form, prime_height, tensor_presentation)
from .profile import (HeightSequence, SpectralProfile, build_profile, is_af_domain, is_afn,
                      is_locally_jaffard, profile_from_presentation, validate_profile)
from .engine import (FormulaTrace, PreconditionError, TensorPrimeDescriptor, dim_tensor_af_af,
                     dim_tensor_af_any, dim_tensor_fields, dim_tensor_thm27, gsct_height,
                     ht_min_over_extension, ht_mixed_ideal, onedim_ht, sct_height, wadsworth_D)

__version__ = "0.1.0"
