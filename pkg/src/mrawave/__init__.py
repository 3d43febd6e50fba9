"""Orthonormal wavelets from multiresolution scaling filters.

Build and check scaling filters (:mod:`mrawave.filters`), inspect their
Fourier-side behaviour (:mod:`mrawave.fourier`), sample phi and psi on dyadic
grids (:mod:`mrawave.cascade`) and run periodic multilevel transforms
(:mod:`mrawave.transform`).
"""
from .cascade import (SampledFunction, cascade_scaling, cross_gram, realize_wavelet,
                      translate_gram, two_scale_residual)
from .errors import *  # noqa: F401,F403
from .filters import (Modulation, ScalingFilter, TrigPolynomial, WaveletSystem, daubechies4,
                      derive_wavelet, eval_m0, eval_wavelet_symbol, haar, make_scaling_filter,
                      modulate, modulation_matrix_check, smith_barnwell_check)
from .fourier import (FourierSamples, lemma1_periodization_check, phi_hat_product,
                      psi_hat_product, sample_phi_hat, sample_psi_hat, support_check,
                      support_measure)
from .reports import CheckReport
from .transform import (Decomposition, analyze, analyze_once, synthesize, synthesize_once)

__version__ = "0.1.0"
